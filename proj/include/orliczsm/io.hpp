#ifndef ORLICZSM_IO_HPP
#define ORLICZSM_IO_HPP

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "orliczsm/orlicz.hpp"
#include "orliczsm/spectrum.hpp"
#include "orliczsm/verify.hpp"

namespace orliczsm {

/// Malformed input; `what()` names the offending line when known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 17 significant digits; non-finite values print as null.
std::string format_double(double x);

/// One {"k": int, "re": real, "im": real} object per line; "im" optional,
/// blank lines skipped, exact zeros dropped, duplicate k rejected.
CoeffSeq read_coefficients(std::istream& in);
/// Support in ascending k.
void write_coefficients(std::ostream& out, const CoeffSeq& f);

/// {"family":"power","p":2} | {"family":"exp_minus_one"} | {"family":"power_log","p":2}.
OrliczFunction parse_orlicz(const std::string& json);
std::string orlicz_to_json(const OrliczFunction& phi);

void write_report_json(std::ostream& out, const Report& r);
/// Metadata as "# key,value" lines, then input,lhs,rhs,ratio rows.
void write_report_csv(std::ostream& out, const Report& r);

}  // namespace orliczsm

#endif  // ORLICZSM_IO_HPP
