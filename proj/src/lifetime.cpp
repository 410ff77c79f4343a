#include "pmad/lifetime.hpp"

#include "pmad/errors.hpp"

#include <cmath>

namespace pmad {

namespace {

double survival_at_age(const ResidualSpec& rs) {
    const double s = survival(rs.params, rs.t);
    if (s == 0.0) throw DomainError("residual life: survival at age t is zero");
    return s;
}

double cdf_at_age(const ResidualSpec& rs) {
    const double f = cdf(rs.params, rs.t);
    if (f == 0.0) throw DomainError("reversed residual life: cdf at age t is zero");
    return f;
}

void check_forward(double x) {
    if (!(x >= 0.0)) throw DomainError("residual life: x must be nonnegative");
}

void check_reversed(const ResidualSpec& rs, double x) {
    if (!(x >= 0.0 && x < rs.t)) throw DomainError("reversed residual life: need 0 <= x < t");
}

}  // namespace

ResidualSpec::ResidualSpec(Params params_, double t_) : params(params_), t(t_) {
    if (!(t_ > 0.0) || !std::isfinite(t_)) throw DomainError("ResidualSpec: t must be positive");
}

double residual_survival(const ResidualSpec& rs, double x) {
    check_forward(x);
    return survival(rs.params, rs.t + x) / survival_at_age(rs);
}

double residual_pdf(const ResidualSpec& rs, double x) {
    check_forward(x);
    return pdf(rs.params, rs.t + x) / survival_at_age(rs);
}

double residual_hazard(const ResidualSpec& rs, double x) {
    check_forward(x);
    survival_at_age(rs);
    return hazard(rs.params, rs.t + x);
}

double reversed_residual_survival(const ResidualSpec& rs, double x) {
    check_reversed(rs, x);
    return cdf(rs.params, rs.t - x) / cdf_at_age(rs);
}

double reversed_residual_pdf(const ResidualSpec& rs, double x) {
    check_reversed(rs, x);
    return pdf(rs.params, rs.t - x) / cdf_at_age(rs);
}

double reversed_residual_hazard(const ResidualSpec& rs, double x) {
    check_reversed(rs, x);
    cdf_at_age(rs);
    return reverse_hazard(rs.params, rs.t - x);
}

}  // namespace pmad
