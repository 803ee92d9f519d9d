#include "idem/bellman.hpp"

namespace idem {

std::string_view to_string(bellman_method method) noexcept {
  switch (method) {
  case bellman_method::jacobi: return "jacobi";
  case bellman_method::gauss_seidel: return "gauss-seidel";
  case bellman_method::star: return "star";
  }
  return "?";
}

bellman_method parse_bellman_method(std::string_view name) {
  if (name == "jacobi") return bellman_method::jacobi;
  if (name == "gauss-seidel") return bellman_method::gauss_seidel;
  if (name == "star") return bellman_method::star;
  throw domain_error("unknown method '" + std::string(name) +
                     "' (expected jacobi, gauss-seidel or star)");
}

} // namespace idem
