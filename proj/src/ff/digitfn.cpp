#include "ff/digitfn.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "core/error.hpp"

namespace autoseq {

std::string ValueHistogram::csv() const {
    std::string out;
    size_t pos = 0;
    while (pos < manifest.size()) {
        auto nl = manifest.find('\n', pos);
        std::string line = manifest.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        if (!line.empty()) out += "# " + line + "\n";
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    out += "c,count,expected,bound\n";
    for (size_t c = 0; c < counts.size(); ++c) {
        double exp_c = closed_form.empty() ? expected : (double)closed_form[c];
        out += std::to_string(c) + "," + std::to_string(counts[c]) + "," +
               std::to_string(exp_c) + "," + (bound ? std::to_string(*bound) : "") + "\n";
    }
    return out;
}

felem digit_value(const FieldCtx& F, DigitKind kind, felem xi) {
    if (F.r() < 2) fail(errc::invalid_argument, "digit functions need an extension field");
    uint32_t coords[64];
    F.coords(xi, coords);
    uint64_t acc = 0;
    if (kind == DigitKind::thue_morse) {
        for (uint32_t i = 0; i < F.r(); ++i) acc += coords[i];
    } else {
        for (uint32_t i = 0; i + 1 < F.r(); ++i) acc += (uint64_t)coords[i] * coords[i + 1];
    }
    return (felem)(acc % F.p());
}

ValueHistogram count_along_polynomial(const FieldCtx& F, DigitKind kind, const UniPoly& f,
                                      uint64_t cap) {
    if (F.r() < 2) fail(errc::invalid_argument, "digit functions need an extension field");
    if (F.q() > cap) fail(errc::cap_exceeded, "field enumeration cap exceeded");
    if (!f.degree() || *f.degree() < 1)
        fail(errc::invalid_argument, "constant polynomial is degenerate here");
    if (f.field() != &F && !f.field()->same_as(F))
        fail(errc::invalid_argument, "polynomial context mismatch");

    ValueHistogram h;
    h.counts.assign(F.p(), 0);
    h.domain_size = F.q();
    double pr1 = (double)F.q() / F.p();
    h.expected = pr1;

    // Value table of the digit function makes the scan one lookup per point.
    std::vector<felem> table((size_t)F.q());
    for (uint64_t x = 0; x < F.q(); ++x) table[x] = digit_value(F, kind, (felem)x);

    for (uint64_t x = 0; x < F.q(); ++x) ++h.counts[table[f.eval((felem)x)]];

    int64_t d = *f.degree();
    if (kind == DigitKind::thue_morse && std::gcd((uint64_t)d, F.q()) == 1)
        h.bound = (double)(d - 1) * std::sqrt((double)F.q());

    std::string basis;
    for (const auto& row : F.basis()) {
        basis += basis.empty() ? "" : ";";
        for (size_t i = 0; i < row.size(); ++i) basis += (i ? "," : "") + std::to_string(row[i]);
    }
    h.manifest = "p=" + std::to_string(F.p()) + "\nr=" + std::to_string(F.r()) +
                 "\nfield=" + F.describe() + "\nbasis=" + basis + "\nf=" + f.text() +
                 "\nkind=" + (kind == DigitKind::thue_morse ? std::string("T") : std::string("R")) +
                 "\n";
    return h;
}

JointShiftCount joint_shift_count(const FieldCtx& F, const UniPoly& f,
                                  std::span<const felem> shifts, std::span<const felem> targets,
                                  uint64_t cap) {
    if (F.r() < 2) fail(errc::invalid_argument, "digit functions need an extension field");
    if (F.q() > cap) fail(errc::cap_exceeded, "field enumeration cap exceeded");
    if (shifts.size() != targets.size() || shifts.empty())
        fail(errc::invalid_argument, "need matching shift and target lists");
    if (!f.degree() || *f.degree() < 1) fail(errc::invalid_argument, "degenerate polynomial");
    int64_t d = *f.degree();
    size_t s = shifts.size();
    if ((int64_t)s > d) fail(errc::invalid_argument, "more shifts than the degree allows");
    if ((uint64_t)d >= F.p()) fail(errc::invalid_argument, "theorem needs deg f < p");
    for (size_t i = 0; i < s; ++i)
        for (size_t j = i + 1; j < s; ++j)
            if (shifts[i] == shifts[j]) fail(errc::invalid_argument, "duplicate shifts");

    std::vector<felem> table((size_t)F.q());
    for (uint64_t x = 0; x < F.q(); ++x) table[x] = digit_value(F, DigitKind::thue_morse, (felem)x);

    JointShiftCount out;
    for (uint64_t x = 0; x < F.q(); ++x) {
        bool all = true;
        for (size_t i = 0; i < s && all; ++i) {
            felem arg = F.add((felem)x, shifts[i]);
            all = table[f.eval(arg)] == targets[i];
        }
        if (all) ++out.count;
    }
    double pw = 1.0;
    for (uint32_t i = 0; i < F.r() - (uint32_t)s; ++i) pw *= F.p();
    // p^(r-s) can be fractional only when s > r; the theorem regime has s <= d < p.
    if ((uint32_t)s > F.r()) {
        pw = std::pow((double)F.p(), (double)F.r() - (double)s);
    }
    out.expected = pw;
    out.bound = (double)(d - 1) * std::sqrt((double)F.q());
    return out;
}

std::vector<uint64_t> count_along_polynomial_charsum(const FieldCtx& F, const UniPoly& f) {
    const double pi = std::acos(-1.0);
    uint32_t p = F.p();
    std::vector<std::complex<double>> sums(p, 0.0); // S_h = sum_xi e(h T(f(xi))/p)
    for (uint64_t x = 0; x < F.q(); ++x) {
        felem v = digit_value(F, DigitKind::thue_morse, f.eval((felem)x));
        for (uint32_t h = 0; h < p; ++h) {
            double ang = 2.0 * pi * (double)((uint64_t)h * v % p) / (double)p;
            sums[h] += std::polar(1.0, ang);
        }
    }
    std::vector<uint64_t> counts(p, 0);
    for (uint32_t c = 0; c < p; ++c) {
        std::complex<double> acc = 0.0;
        for (uint32_t h = 0; h < p; ++h) {
            double ang = -2.0 * pi * (double)((uint64_t)h * c % p) / (double)p;
            acc += sums[h] * std::polar(1.0, ang);
        }
        counts[c] = (uint64_t)std::llround(acc.real() / (double)p);
    }
    return counts;
}

} // namespace autoseq
