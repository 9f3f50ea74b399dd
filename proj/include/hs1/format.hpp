#pragma once

#include "hs1/bicross.hpp"
#include "hs1/report.hpp"

namespace hs1 {

enum class OutputFormat { text, json, latex };

OutputFormat parse_format(const std::string& s);

std::string format_f(const FElement& x, OutputFormat fmt);
std::string format_u(const UEnvElement& x, OutputFormat fmt);
std::string format_tensor(const GradedTensor& t, OutputFormat fmt);
std::string format_h(const HElement& h, OutputFormat fmt);
std::string format_rational(const Rational& r, OutputFormat fmt);
std::string format_report(const Report& r, OutputFormat fmt);

} // namespace hs1
