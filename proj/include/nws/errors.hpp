#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nws {

enum class errc {
  empty_input,
  non_cofinite_input,
  invalid_parameter,
  resource_limit,
  ring_mismatch,
  not_groebner,
  not_minimal,
  not_a_complex,
  rank_mismatch,
  genus_too_small,
  degenerate_input,
};

inline std::string_view errc_name(errc code) {
  switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::non_cofinite_input: return "NonCofiniteInput";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::resource_limit: return "ResourceLimit";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_groebner: return "NotGroebner";
    case errc::not_minimal: return "NotMinimal";
    case errc::not_a_complex: return "NotAComplex";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::genus_too_small: return "GenusTooSmall";
    case errc::degenerate_input: return "DegenerateInput";
  }
  return "Error";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace nws
