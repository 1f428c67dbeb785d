#pragma once

#include <stdexcept>
#include <string>

namespace primerec {

/// Failure classes. Each maps onto exactly one CLI exit status.
enum class errc {
  domain,               // argument outside the operation's domain
  usage,                // malformed request (bad format tag, bad size list)
  invariant_violation,  // a mathematically impossible state was reached
  oracle_mismatch,      // a computed value disagreed with the ground truth
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void throw_domain(const std::string& what) {
  throw error(errc::domain, what);
}

}  // namespace primerec
