#include "hopftube/polynomial.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hopftube {

namespace {

// z^e with nonnegative integer exponents
Complex cpow_int(Complex z, int e) {
    Complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

}  // namespace

Complex AlgebraicHypersurface::value(const CVec& z) const {
    if (z.size() != nvars) throw DimensionError("polynomial arity mismatch");
    Complex s(0.0, 0.0);
    for (const auto& m : monomials) {
        Complex t = m.coefficient;
        for (int j = 0; j < nvars; ++j) t *= cpow_int(z(j), m.exponents[j]);
        s += t;
    }
    return s;
}

CVec AlgebraicHypersurface::gradient(const CVec& z) const {
    if (z.size() != nvars) throw DimensionError("polynomial arity mismatch");
    CVec g = CVec::Zero(nvars);
    for (const auto& m : monomials) {
        for (int j = 0; j < nvars; ++j) {
            const int e = m.exponents[j];
            if (e == 0) continue;
            Complex t = m.coefficient * static_cast<double>(e) *
                        cpow_int(z(j), e - 1);
            for (int k = 0; k < nvars; ++k) {
                if (k == j) continue;
                t *= cpow_int(z(k), m.exponents[k]);
            }
            g(j) += t;
        }
    }
    return g;
}

Eigen::MatrixXcd AlgebraicHypersurface::hessian(const CVec& z) const {
    if (z.size() != nvars) throw DimensionError("polynomial arity mismatch");
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(nvars, nvars);
    for (const auto& m : monomials) {
        for (int j = 0; j < nvars; ++j) {
            const int ej = m.exponents[j];
            if (ej == 0) continue;
            for (int k = 0; k < nvars; ++k) {
                const int ek = m.exponents[k];
                Complex t = m.coefficient;
                if (j == k) {
                    if (ej < 2) continue;
                    t *= static_cast<double>(ej) * static_cast<double>(ej - 1) *
                         cpow_int(z(j), ej - 2);
                } else {
                    if (ek == 0) continue;
                    t *= static_cast<double>(ej) * static_cast<double>(ek) *
                         cpow_int(z(j), ej - 1) * cpow_int(z(k), ek - 1);
                }
                for (int l = 0; l < nvars; ++l) {
                    if (l == j || l == k) continue;
                    t *= cpow_int(z(l), m.exponents[l]);
                }
                h(j, k) += t;
            }
        }
    }
    return h;
}

double AlgebraicHypersurface::value_scale(const CVec& z) const {
    if (z.size() != nvars) throw DimensionError("polynomial arity mismatch");
    double s = 0.0;
    for (const auto& m : monomials) {
        double t = std::abs(m.coefficient);
        for (int j = 0; j < nvars; ++j)
            t *= std::pow(std::abs(z(j)), m.exponents[j]);
        s += t;
    }
    return s;
}

RVec AlgebraicHypersurface::gradient_scale(const CVec& z) const {
    if (z.size() != nvars) throw DimensionError("polynomial arity mismatch");
    RVec g = RVec::Zero(nvars);
    for (const auto& m : monomials) {
        for (int j = 0; j < nvars; ++j) {
            const int e = m.exponents[j];
            if (e == 0) continue;
            double t = std::abs(m.coefficient) * e *
                       std::pow(std::abs(z(j)), e - 1);
            for (int k = 0; k < nvars; ++k) {
                if (k == j) continue;
                t *= std::pow(std::abs(z(k)), m.exponents[k]);
            }
            g(j) += t;
        }
    }
    return g;
}

AlgebraicHypersurface make_polynomial(
    std::vector<AlgebraicHypersurface::Monomial> monos) {
    if (monos.empty()) throw PreconditionError("polynomial has no monomials");
    AlgebraicHypersurface f;
    f.nvars = static_cast<int>(monos.front().exponents.size());
    if (f.nvars < 2) throw PreconditionError("polynomial needs >= 2 variables");
    int deg = -1;
    for (const auto& m : monos) {
        if (static_cast<int>(m.exponents.size()) != f.nvars)
            throw DimensionError("monomial arity mismatch");
        int d = 0;
        for (int e : m.exponents) {
            if (e < 0) throw PreconditionError("negative exponent");
            d += e;
        }
        if (deg < 0)
            deg = d;
        else if (d != deg)
            throw PreconditionError("polynomial is not homogeneous");
    }
    f.degree = deg;
    f.monomials = std::move(monos);
    return f;
}

AlgebraicHypersurface parse_polynomial(const std::string& text) {
    std::vector<AlgebraicHypersurface::Monomial> monos;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // skip blank lines
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "expected '<re> <im> : e0 e1 ...'");
        std::istringstream head(line.substr(0, colon));
        double re, im;
        if (!(head >> re >> im))
            throw ParseError(lineno, "bad coefficient");
        std::string extra;
        if (head >> extra)
            throw ParseError(lineno, "unexpected token before ':'");

        std::istringstream tail(line.substr(colon + 1));
        std::vector<int> exps;
        long long e;
        while (tail >> e) {
            if (e < 0) throw ParseError(lineno, "negative exponent");
            exps.push_back(static_cast<int>(e));
        }
        if (!tail.eof()) throw ParseError(lineno, "bad exponent");
        if (exps.empty()) throw ParseError(lineno, "no exponents");
        monos.push_back({Complex(re, im), std::move(exps)});
    }
    if (monos.empty()) throw ParseError(lineno, "empty polynomial");
    try {
        return make_polynomial(std::move(monos));
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
}

AlgebraicHypersurface parse_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polynomial(buf.str());
}

std::string format_polynomial(const AlgebraicHypersurface& f) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& m : f.monomials) {
        out << m.coefficient.real() << " " << m.coefficient.imag() << " :";
        for (int e : m.exponents) out << " " << e;
        out << "\n";
    }
    return out.str();
}

double euler_residual(const AlgebraicHypersurface& f, const CVec& z) {
    const Complex v = f.value(z);
    const CVec g = f.gradient(z);
    Complex dot(0.0, 0.0);
    for (int j = 0; j < f.nvars; ++j) dot += z(j) * g(j);
    const double num = std::abs(dot - static_cast<double>(f.degree) * v);
    const double den = std::max(1.0, f.value_scale(z) * f.degree);
    return num / den;
}

}  // namespace hopftube
