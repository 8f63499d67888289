#include "brickwork/budget.hpp"

#include <cstdlib>
#include <string>

#include "brickwork/errors.hpp"

namespace brickwork {

namespace {

template <typename T>
void read_env(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const long long value = std::stoll(raw, &used);
    if (used != std::string(raw).size() || value <= 0) throw std::invalid_argument(raw);
    target = static_cast<T>(value);
  } catch (const std::exception&) {
    throw PreconditionError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  read_env("BRICKWORK_SOLID_MAX_N", b.solid_max_n);
  read_env("BRICKWORK_PM_CAP", b.pm_cap);
  read_env("BRICKWORK_WITNESS_STEPS", b.witness_steps);
  return b;
}

}  // namespace brickwork
