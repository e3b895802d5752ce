#pragma once

#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpde/congruence.hpp"
#include "qpde/identities.hpp"
#include "qpde/numeric.hpp"
#include "qpde/partitions.hpp"
#include "qpde/series.hpp"

// Machine-readable output: JSON documents for series, identity reports and
// numeric residuals, JSON-lines for scan candidates, CSV for moment tables.
// Field order is fixed (ordered_json) so emitted documents diff cleanly.

namespace qpde {

using Json = nlohmann::ordered_json;

inline Json to_json(const Cyclo& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coords()) coeffs.push_back(format_rat(r));
    return Json{{"N", c.order()}, {"coeffs", coeffs}};
}

inline Json to_json(const ZPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back(Json{{"z", format_rat(Rat(e, p.dz()))}, {"c", to_json(c)}});
    return arr;
}

inline Json to_json(const RatCoeff& c) {
    return Json{{"num", to_json(c.num())}, {"den", to_json(c.den())}};
}

inline Json to_json(const QSeries& s) {
    long long dz = 1;
    for (const auto& [e, c] : s.terms()) {
        dz = lllcm(dz, c.num().dz());
        dz = lllcm(dz, c.den().dz());
    }
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json{{"q", format_rat(Rat(e, s.dq()))}, {"coeff", to_json(c)}});
    Json out;
    out["Dq"] = s.dq();
    out["Dz"] = dz;
    out["order"] = s.exact() ? "inf" : format_rat(s.order());
    out["terms"] = std::move(terms);
    return out;
}

inline Json to_json(const IdentityReport& r) {
    Json out;
    out["name"] = r.name;
    out["order"] = format_rat(r.order);
    out["status"] = r.pass ? "pass" : "fail";
    if (r.discrepancy)
        out["discrepancy"] = Json{{"q", format_rat(r.discrepancy->q)},
                                  {"lhs", r.discrepancy->lhs},
                                  {"rhs", r.discrepancy->rhs}};
    else
        out["discrepancy"] = nullptr;
    out["seconds"] = r.seconds;
    return out;
}

inline Json to_json(const std::vector<IdentityReport>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

// One candidate per line; the field order never changes so scan output can be
// compared with a plain diff.
inline std::string to_json_line(const CongruenceCandidate& c) {
    Json out;
    out["p"] = c.p;
    out["j"] = c.j;
    out["k"] = c.k;
    out["A"] = c.A;
    out["B"] = c.B;
    out["nMaxTested"] = c.n_max_tested;
    out["status"] = c.verified()
                        ? std::string("verifiedUpTo")
                        : "refutedAt(" + std::to_string(*c.refuted_at) + ")";
    return out.dump();
}

inline std::string to_json_lines(const std::vector<CongruenceCandidate>& cs) {
    std::string out;
    for (const auto& c : cs) {
        out += to_json_line(c);
        out += '\n';
    }
    return out;
}

inline Json to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const ComplexPoint& p) {
    return Json{{"u", to_json(p.u)}, {"v", to_json(p.v)}, {"tau", to_json(p.tau)}, {"tol", p.tol}};
}

inline Json to_json(const Residual& r) {
    return Json{{"name", r.name},
                {"point", to_json(r.point)},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"absErr", r.abs_err}};
}

inline Json to_json(const std::vector<Residual>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

inline std::string to_csv(const MomentTable& t) {
    std::string out = "n,value\n";
    for (const auto& [n, v] : t.values) out += std::to_string(n) + "," + v.str() + "\n";
    return out;
}

// ---- plain-text rendering ----------------------------------------------

inline std::string render_text(const QSeries& s) {
    std::string out;
    for (const auto& [e, c] : s.terms())
        out += "q^(" + format_rat(Rat(e, s.dq())) + "): " + c.str() + "\n";
    if (!s.exact()) out += "+ O(q^(" + format_rat(s.order()) + "))\n";
    return out;
}

inline std::string render_text(const IdentityReport& r) {
    std::ostringstream os;
    os << r.name << "  order " << format_rat(r.order) << "  "
       << (r.pass ? "pass" : "FAIL");
    if (r.discrepancy)
        os << " at q^(" << format_rat(r.discrepancy->q) << "): lhs = " << r.discrepancy->lhs
           << ", rhs = " << r.discrepancy->rhs;
    os << "  (" << r.seconds << "s)";
    return os.str();
}

inline std::string render_text(const CongruenceCandidate& c) {
    std::ostringstream os;
    if (c.k == 0)
        os << "p(" << c.A << "n+" << c.B << ")";
    else
        os << "eta" << c.k << "*(" << c.A << "n+" << c.B << ")";
    os << " == 0 (mod " << c.p;
    if (c.j > 1) os << "^" << c.j;
    os << ")  ";
    if (c.verified())
        os << "verifiedUpTo " << c.n_max_tested;
    else
        os << "refutedAt(" << *c.refuted_at << ")";
    return os.str();
}

inline std::string format_complex(const std::complex<double>& z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

inline std::string render_text(const Residual& r, double threshold) {
    std::ostringstream os;
    os << r.name << "  u=" << format_complex(r.point.u) << " v=" << format_complex(r.point.v)
       << " tau=" << format_complex(r.point.tau) << "  absErr=" << r.abs_err << "  "
       << (r.abs_err <= threshold ? "pass" : "FAIL");
    return os.str();
}

}  // namespace qpde
