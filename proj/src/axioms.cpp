#include "idem/axioms.hpp"

namespace idem {

std::string_view to_string(axiom_status status) noexcept {
  switch (status) {
  case axiom_status::passed: return "pass";
  case axiom_status::failed: return "FAIL";
  case axiom_status::not_claimed: return "not-claimed";
  }
  return "?";
}

} // namespace idem
