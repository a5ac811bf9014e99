#ifndef ZETACRIT_REPORT_HPP
#define ZETACRIT_REPORT_HPP

#include <cstdio>
#include <string>

#include "zetacrit/criteria.hpp"

namespace zetacrit {

inline const char* kind_name(CriterionKind k) {
    switch (k) {
    case CriterionKind::Theorem1:   return "theorem1";
    case CriterionKind::Theorem1a:  return "theorem1a";
    case CriterionKind::Theorem2:   return "theorem2";
    case CriterionKind::Theorem2a:  return "theorem2a";
    case CriterionKind::Volchkov:   return "volchkov";
    case CriterionKind::Eq14:       return "eq14";
    case CriterionKind::Eq17:       return "eq17";
    case CriterionKind::GammaAlpha: return "gamma_alpha";
    }
    return "unknown";
}

namespace detail {

// Fixed 15-significant-digit, locale-independent number rendering so
// identical runs emit byte-identical reports.
inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

} // namespace detail

inline std::string to_json(const CriterionResult& r, double wall_ms) {
    using detail::num;
    std::string s = "{";
    s += "\"criterion\":\"" + std::string(kind_name(r.spec.kind)) + "\",";
    s += "\"params\":{";
    s += "\"b\":" + num(r.spec.b) + ",";
    s += "\"c\":" + num(r.spec.c) + ",";
    s += "\"d\":" + num(r.spec.d) + ",";
    s += "\"a\":" + num(r.spec.a) + ",";
    s += "\"alpha\":" + num(r.spec.alpha) + ",";
    s += "\"tol\":" + num(r.spec.tol) + "},";
    s += "\"lhs\":" + num(r.lhs) + ",";
    s += "\"rhs\":" + num(r.rhs) + ",";
    s += "\"residual\":" + num(r.residual) + ",";
    s += "\"quad_error\":" + num(r.quad_error) + ",";
    s += "\"tail_bound\":" + num(r.tail_bound) + ",";
    s += "\"zeros_used\":" + std::to_string(r.zeros_used) + ",";
    s += "\"t_max\":" + num(r.spec.t_max) + ",";
    s += "\"wall_ms\":" + num(wall_ms) + "}";
    return s;
}

inline std::string csv_header() {
    return "criterion,b,c,d,a,alpha,tol,lhs,rhs,residual,quad_error,"
           "tail_bound,zeros_used,t_max,wall_ms";
}

inline std::string to_csv(const CriterionResult& r, double wall_ms) {
    using detail::num;
    std::string s = kind_name(r.spec.kind);
    s += "," + num(r.spec.b) + "," + num(r.spec.c) + "," + num(r.spec.d);
    s += "," + num(r.spec.a) + "," + num(r.spec.alpha);
    s += "," + num(r.spec.tol);
    s += "," + num(r.lhs) + "," + num(r.rhs) + "," + num(r.residual);
    s += "," + num(r.quad_error) + "," + num(r.tail_bound);
    s += "," + std::to_string(r.zeros_used) + "," + num(r.spec.t_max);
    s += "," + num(wall_ms);
    return s;
}

inline std::string to_human(const CriterionResult& r, double wall_ms) {
    using detail::num;
    std::string s;
    s += "criterion   " + std::string(kind_name(r.spec.kind)) + "\n";
    s += "lhs         " + num(r.lhs) + "\n";
    s += "rhs         " + num(r.rhs) + "\n";
    s += "residual    " + num(r.residual) + "\n";
    s += "quad_error  " + num(r.quad_error) + "\n";
    s += "tail_bound  " + num(r.tail_bound) + "\n";
    s += "zeros_used  " + std::to_string(r.zeros_used) + "\n";
    s += "t_max       " + num(r.spec.t_max) + "\n";
    s += "wall_ms     " + num(wall_ms) + "\n";
    return s;
}

// Residual classification used for exit statuses: a criterion "passes at
// desk scale" when |residual| fits inside the auditable error budget plus
// the 1e-7 slack for zeros beyond t_max.
inline bool residual_within_bound(const CriterionResult& r) {
    return std::abs(r.residual) <=
           r.quad_error + r.tail_bound + 1.0e-7;
}

} // namespace zetacrit

#endif
