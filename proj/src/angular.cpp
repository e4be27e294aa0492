#include "symphase/angular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "symphase/errors.hpp"

namespace symphase::linalg {

namespace {

// Covers N up to ~100 qubits: Clebsch-Gordan arguments reach 3*N + 2.
constexpr int kMaxFactorial = 384;

const std::array<double, kMaxFactorial + 1>& factorial_table() {
    static const auto table = [] {
        std::array<double, kMaxFactorial + 1> t{};
        long double acc = 0.0L;
        t[0] = 0.0;
        for (int k = 1; k <= kMaxFactorial; ++k) {
            acc += std::log(static_cast<long double>(k));
            t[k] = static_cast<double>(acc);
        }
        return t;
    }();
    return table;
}

// Exact doubled (2x) integer from a half-integer argument.
int doubled(double x, const char* name) {
    const double twice = 2.0 * x;
    const double r = std::round(twice);
    if (std::abs(twice - r) > 1e-9)
        throw InvalidQuantumNumbers(std::string(name) + " is not a half-integer: " + std::to_string(x));
    return static_cast<int>(r);
}

}  // namespace

double log_factorial(int n) {
    if (n < 0 || n > kMaxFactorial) throw Error("log_factorial: argument out of table range");
    return factorial_table()[n];
}

double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M) {
    const int tj1 = doubled(j1, "j1"), tm1 = doubled(m1, "m1");
    const int tj2 = doubled(j2, "j2"), tm2 = doubled(m2, "m2");
    const int tJ = doubled(J, "J"), tM = doubled(M, "M");

    if (tj1 < 0 || tj2 < 0 || tJ < 0)
        throw InvalidQuantumNumbers("negative angular momentum");
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ)
        throw InvalidQuantumNumbers("|m| exceeds j");
    if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tJ + tM) % 2 != 0)
        throw InvalidQuantumNumbers("m does not match the integer/half-integer lattice of j");

    if (tM != tm1 + tm2) return 0.0;
    if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
    // j1 + j2 + J must be an integer for a nonzero coupling.
    if ((tj1 + tj2 + tJ) % 2 != 0) return 0.0;

    // Racah's single-sum formula, evaluated in log space with sign tracking.
    // All factorial arguments below are integers (stored doubled).
    const auto f = [](int t) { return log_factorial(t / 2); };

    const int ta = tj1 + tj2 - tJ;
    const int tb = tj1 - tj2 + tJ;
    const int tc = -tj1 + tj2 + tJ;
    if (ta < 0 || tb < 0 || tc < 0) return 0.0;

    const double prefactor_log =
        0.5 * (std::log(tJ + 1.0) + f(ta) + f(tb) + f(tc) - f(tj1 + tj2 + tJ + 2) +
               f(tJ + tM) + f(tJ - tM) + f(tj1 + tm1) + f(tj1 - tm1) + f(tj2 + tm2) +
               f(tj2 - tm2));

    const int tk_min = std::max({0, tj2 - tJ - tm1, tj1 - tJ + tm2});
    const int tk_max = std::min({ta, tj1 - tm1, tj2 + tm2});
    if (tk_min > tk_max) return 0.0;

    // Accumulate sum(k) (-1)^k exp(term_k - term_max) for stability.
    double max_term_log = -1e300;
    std::vector<double> term_logs;
    std::vector<int> term_signs;
    for (int tk = tk_min; tk <= tk_max; tk += 2) {
        const double tl = -(f(tk) + f(ta - tk) + f(tj1 - tm1 - tk) + f(tj2 + tm2 - tk) +
                            f(tJ - tj2 + tm1 + tk) + f(tJ - tj1 - tm2 + tk));
        term_logs.push_back(tl);
        term_signs.push_back((tk / 2) % 2 == 0 ? 1 : -1);
        max_term_log = std::max(max_term_log, tl);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < term_logs.size(); ++i)
        s += term_signs[i] * std::exp(term_logs[i] - max_term_log);
    if (s == 0.0) return 0.0;
    const double sign = s > 0.0 ? 1.0 : -1.0;
    return sign * std::exp(prefactor_log + max_term_log + std::log(std::abs(s)));
}

void ylm_table(int kmax, double theta, double phi, std::vector<std::complex<double>>& out) {
    if (kmax < 0) throw InvalidDegreeOrder("ylm: negative degree");
    out.assign((kmax + 1) * (kmax + 1), {0.0, 0.0});

    const double x = std::cos(theta);
    const double sx = std::sin(theta);
    const double pi = std::acos(-1.0);

    // Normalized associated Legendre values via the standard stable recursion;
    // the Condon-Shortley (-1)^m sign is carried by the diagonal step.
    std::vector<double> plm((kmax + 1) * (kmax + 2) / 2, 0.0);
    const auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };

    plm[idx(0, 0)] = 1.0 / std::sqrt(4.0 * pi);
    for (int m = 1; m <= kmax; ++m)
        plm[idx(m, m)] = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * sx * plm[idx(m - 1, m - 1)];
    for (int m = 0; m < kmax; ++m)
        plm[idx(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * plm[idx(m, m)];
    for (int m = 0; m <= kmax; ++m)
        for (int l = m + 2; l <= kmax; ++l) {
            const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
            const double b =
                std::sqrt((static_cast<double>(l - 1) * (l - 1) - m * m) / (4.0 * static_cast<double>(l - 1) * (l - 1) - 1.0));
            plm[idx(l, m)] = a * (x * plm[idx(l - 1, m)] - b * plm[idx(l - 2, m)]);
        }

    for (int l = 0; l <= kmax; ++l) {
        out[kq_index(l, 0)] = plm[idx(l, 0)];
        for (int m = 1; m <= l; ++m) {
            const std::complex<double> e{std::cos(m * phi), std::sin(m * phi)};
            const std::complex<double> y = plm[idx(l, m)] * e;
            out[kq_index(l, m)] = y;
            // Y_{l,-m} = (-1)^m conj(Y_{l,m})
            out[kq_index(l, -m)] = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
        }
    }
}

std::complex<double> ylm(int k, int q, double theta, double phi) {
    if (k < 0 || std::abs(q) > k)
        throw InvalidDegreeOrder("ylm: require K >= 0 and |Q| <= K");
    std::vector<std::complex<double>> table;
    ylm_table(k, theta, phi, table);
    return table[kq_index(k, q)];
}

}  // namespace symphase::linalg
