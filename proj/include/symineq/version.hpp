#pragma once

namespace symineq {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "symineq-report/1";

}  // namespace symineq
