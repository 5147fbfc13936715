#include "cyclo/diffeq.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace cyclo {

std::string to_string(UnitModulusFlag flag) {
    switch (flag) {
        case UnitModulusFlag::none: return "none";
        case UnitModulusFlag::necessary_condition_met: return "necessary_condition_met";
        case UnitModulusFlag::numerically_confirmed: return "numerically_confirmed";
    }
    return "none";
}

namespace {

// Eigenvalues of the companion matrix of a monic polynomial of degree >= 1.
Eigen::VectorXcd companion_roots(const RatPoly& monic) {
    const auto m = static_cast<Eigen::Index>(monic.degree());
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < m; ++i)
        companion(i, m - 1) = -monic.coeffs()[static_cast<std::size_t>(i)].get_d();
    return Eigen::EigenSolver<Eigen::MatrixXd>(companion, false).eigenvalues();
}

}  // namespace

UnitModulusFlag unit_modulus_screen(const RatPoly& p) {
    if (p.degree() < 1) throw DomainError("unit-modulus screen of a constant polynomial");

    // A root on the unit circle satisfies 1/conj(lambda) == lambda, so it is
    // shared with the reversal. Zero roots are stripped first.
    std::size_t zeros = 0;
    while (p.coeffs()[zeros] == 0) ++zeros;
    const RatPoly stripped(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(zeros), p.coeffs().end()));
    if (stripped.degree() < 1) return UnitModulusFlag::none;

    const RatPoly common = gcd(stripped, stripped.reversed());
    if (common.degree() < 1) return UnitModulusFlag::none;

    // Squarefree part keeps the eigenvalues simple and well conditioned.
    const RatPoly dcommon = common.derivative();
    const RatPoly squarefree = dcommon.is_zero() ? common : exact_divide(common, gcd(common, dcommon)).monic();
    for (const auto& lambda : companion_roots(squarefree))
        if (std::abs(std::abs(lambda) - 1.0) <= kUnitModulusTolerance) return UnitModulusFlag::numerically_confirmed;
    return UnitModulusFlag::necessary_condition_met;
}

PeriodicSeq synth_solution(std::uint64_t d) {
    if (d == 0) throw DomainError("synth_solution requires d >= 1");
    const RatPoly phi = cyclotomic(d);
    const auto order = static_cast<std::size_t>(phi.degree());
    const auto& c = phi.coeffs();

    std::vector<Rational> y(std::max<std::size_t>(d, order));
    y[0] = 1;
    for (std::size_t x = order; x < y.size(); ++x) {
        Rational next = 0;
        for (std::size_t i = 0; i < order; ++i) next -= c[i] * y[x - order + i];
        y[x] = next;
    }
    y.resize(d);
    PeriodicSeq seq(std::move(y));
    if (!apply(phi, seq).is_zero() || fundamental_period(seq) != d)
        throw std::logic_error("synthesized solution is not a period-d kernel element");
    return seq;
}

DiffEqReport analyze(const RatPoly& p) {
    if (p.degree() < 1) throw DomainError("difference equation needs a nonconstant characteristic polynomial");
    if (p.coeffs().front() == 0) throw DomainError("difference equation needs a nonzero constant term");

    DiffEqReport report;
    report.char_poly = p;
    auto [factors, residual] = cyclotomic_factors(p);
    report.cyclotomic_factors = std::move(factors);
    report.residual = std::move(residual);
    report.has_integer_periodic = !report.cyclotomic_factors.empty();

    bool squarefree = true;
    std::vector<std::uint64_t> indices;
    for (const auto& [d, mult] : report.cyclotomic_factors) {
        indices.push_back(d);
        squarefree = squarefree && mult == 1;
        report.sample_solutions.emplace(d, synth_solution(d));
    }
    report.is_cyclotomic_equation = report.has_integer_periodic && squarefree && report.residual.degree() == 0;
    if (report.is_cyclotomic_equation) report.common_period = lcm_of(indices);
    report.unit_modulus_flag = unit_modulus_screen(p);
    return report;
}

std::string periodicity_verdict(const DiffEqReport& report) {
    if (report.is_cyclotomic_equation)
        return "all grid solutions periodic with common period " + std::to_string(*report.common_period);
    if (report.has_integer_periodic) return "some solutions periodic with integer period";
    if (report.unit_modulus_flag == UnitModulusFlag::numerically_confirmed)
        return "periodic solutions of arbitrary (non-integer) period indicated";
    return "no periodic solutions detected";
}

}  // namespace cyclo
