#include "alg/field.hpp"

#include <algorithm>

#include "alg/unipoly.hpp"
#include "core/error.hpp"

namespace autoseq {

namespace {

constexpr uint64_t kMulTableMax = 1024; // build q*q tables up to this size

std::vector<uint32_t> to_poly_coords(felem x, uint32_t p, uint32_t r) {
    std::vector<uint32_t> c(r);
    for (uint32_t i = 0; i < r; ++i) {
        c[i] = x % p;
        x /= p;
    }
    return c;
}

// Inverts an r x r matrix over F_p (rows of coordinates); returns empty when
// singular.
std::vector<std::vector<uint32_t>> invert_matrix(const std::vector<std::vector<uint32_t>>& m,
                                                 uint32_t p) {
    size_t r = m.size();
    std::vector<std::vector<int64_t>> a(r, std::vector<int64_t>(2 * r, 0));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < r; ++j) a[i][j] = m[i][j] % p;
        a[i][r + i] = 1;
    }
    auto modinv = [p](int64_t v) {
        int64_t res = 1, b = v % p, e = p - 2;
        while (e) {
            if (e & 1) res = res * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return res;
    };
    size_t row = 0;
    for (size_t col = 0; col < r; ++col) {
        size_t pivot = row;
        while (pivot < r && a[pivot][col] % p == 0) ++pivot;
        if (pivot == r) return {};
        std::swap(a[pivot], a[row]);
        int64_t iv = modinv(a[row][col]);
        for (auto& v : a[row]) v = v * iv % p;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col] % p == 0) continue;
            int64_t f = a[i][col] % p;
            for (size_t j = 0; j < 2 * r; ++j) a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
        }
        ++row;
    }
    std::vector<std::vector<uint32_t>> inv(r, std::vector<uint32_t>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) inv[i][j] = (uint32_t)a[i][r + j];
    return inv;
}

} // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldCtx::FieldCtx(uint32_t p) : p_(p), r_(1), q_(p) {
    if (!is_prime_u32(p)) fail(errc::invalid_argument, "field characteristic must be prime");
    modulus_ = {0, 1}; // placeholder "x"
    basis_ = {{1}};
    basis_inv_ = {{1}};
    one_ = 1;
    init_tables();
}

FieldCtx::FieldCtx(uint32_t p, uint32_t r) : FieldCtx(p, r, default_modulus(p, r)) {}

FieldCtx::FieldCtx(uint32_t p, uint32_t r, std::vector<uint32_t> modulus) : p_(p), r_(r) {
    if (!is_prime_u32(p)) fail(errc::invalid_argument, "field characteristic must be prime");
    if (r < 1) fail(errc::invalid_argument, "extension degree must be >= 1");
    q_ = 1;
    for (uint32_t i = 0; i < r; ++i) {
        if (q_ > (uint64_t)1 << 31) fail(errc::cap_exceeded, "field too large");
        q_ *= p;
    }
    if (r == 1) {
        modulus_ = {0, 1};
    } else {
        if (modulus.size() != (size_t)r + 1 || modulus.back() % p != 1)
            fail(errc::invalid_argument, "modulus must be monic of degree r");
        for (auto& c : modulus) c %= p;
        if (!modulus_is_irreducible(p, modulus))
            fail(errc::invalid_argument, "modulus is not irreducible");
        modulus_ = std::move(modulus);
    }
    basis_.assign(r, std::vector<uint32_t>(r, 0));
    for (uint32_t i = 0; i < r; ++i) basis_[i][i] = 1;
    basis_inv_ = basis_;
    basis_identity_ = true;
    one_ = 1;
    init_tables();
}

std::shared_ptr<const FieldCtx> FieldCtx::parse(const std::string& text) {
    auto caret = text.find('^');
    uint32_t p = (uint32_t)std::stoul(caret == std::string::npos ? text : text.substr(0, caret));
    uint32_t r = caret == std::string::npos ? 1 : (uint32_t)std::stoul(text.substr(caret + 1));
    return r == 1 ? std::make_shared<const FieldCtx>(p) : std::make_shared<const FieldCtx>(p, r);
}

void FieldCtx::set_basis(const std::vector<std::vector<uint32_t>>& rows) {
    if (rows.size() != r_) fail(errc::invalid_argument, "basis needs r vectors");
    for (const auto& row : rows)
        if (row.size() != r_) fail(errc::invalid_argument, "basis vectors need r coordinates");
    auto inv = invert_matrix(rows, p_);
    if (inv.empty()) fail(errc::invalid_argument, "basis vectors are linearly dependent");
    basis_ = rows;
    for (auto& row : basis_)
        for (auto& v : row) v %= p_;
    basis_inv_ = std::move(inv);
    basis_identity_ = false;
}

void FieldCtx::init_tables() {
    if (q_ > kMulTableMax) return;
    mul_table_.assign((size_t)q_ * q_, 0);
    for (felem a = 0; a < q_; ++a)
        for (felem b = a; b < q_; ++b) {
            felem v = mul_nocache(a, b);
            mul_table_[(size_t)a * q_ + b] = v;
            mul_table_[(size_t)b * q_ + a] = v;
        }
    if (r_ > 1) {
        add_table_.assign((size_t)q_ * q_, 0);
        for (felem a = 0; a < q_; ++a)
            for (felem b = a; b < q_; ++b) {
                felem v = add_nocache(a, b);
                add_table_[(size_t)a * q_ + b] = v;
                add_table_[(size_t)b * q_ + a] = v;
            }
    }
    inv_table_.assign((size_t)q_, 0);
    for (felem a = 1; a < q_; ++a) {
        for (felem b = 1; b < q_; ++b) {
            if (mul_table_[(size_t)a * q_ + b] == one_) {
                inv_table_[a] = b;
                break;
            }
        }
    }
}

felem FieldCtx::add(felem a, felem b) const {
    if (r_ == 1) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[(size_t)a * q_ + b];
    return add_nocache(a, b);
}

felem FieldCtx::add_nocache(felem a, felem b) const {
    if (r_ == 1) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    felem out = 0, mult = 1;
    for (uint32_t i = 0; i < r_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
    }
    return out;
}

felem FieldCtx::sub(felem a, felem b) const { return add(a, neg(b)); }

felem FieldCtx::neg(felem a) const {
    if (r_ == 1) return a == 0 ? 0 : p_ - a;
    felem out = 0, mult = 1;
    for (uint32_t i = 0; i < r_; ++i) {
        uint32_t d = a % p_;
        a /= p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
    }
    return out;
}

felem FieldCtx::mul_nocache(felem a, felem b) const {
    if (r_ == 1) return (felem)((uint64_t)a * b % p_);
    // Schoolbook product of coordinate polynomials, reduced mod modulus_.
    std::vector<uint32_t> pa = to_poly_coords(a, p_, r_);
    std::vector<uint32_t> pb = to_poly_coords(b, p_, r_);
    std::vector<uint64_t> prod(2 * r_ - 1, 0);
    for (uint32_t i = 0; i < r_; ++i) {
        if (!pa[i]) continue;
        for (uint32_t j = 0; j < r_; ++j) prod[i + j] += (uint64_t)pa[i] * pb[j];
    }
    // Reduce: x^r = -(modulus_[0] + ... + modulus_[r-1] x^(r-1)).
    for (size_t d = prod.size(); d-- > r_;) {
        uint64_t c = prod[d] % p_;
        if (!c) continue;
        prod[d] = 0;
        for (uint32_t j = 0; j < r_; ++j) {
            uint64_t m = (uint64_t)(p_ - modulus_[j] % p_) % p_;
            prod[d - r_ + j] += c * m;
        }
    }
    felem out = 0, mult = 1;
    for (uint32_t i = 0; i < r_; ++i) {
        out += (felem)(prod[i] % p_) * mult;
        mult *= p_;
    }
    return out;
}

felem FieldCtx::mul(felem a, felem b) const {
    if (!mul_table_.empty()) return mul_table_[(size_t)a * q_ + b];
    return mul_nocache(a, b);
}

felem FieldCtx::pow(felem a, uint64_t e) const {
    felem out = one_;
    while (e) {
        if (e & 1) out = mul(out, a);
        a = mul(a, a);
        e >>= 1;
    }
    return out;
}

felem FieldCtx::inv(felem a) const {
    if (a == 0) fail(errc::domain, "zero has no inverse");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

void FieldCtx::coords(felem x, uint32_t* out) const {
    if (basis_identity_) {
        for (uint32_t i = 0; i < r_; ++i) {
            out[i] = x % p_;
            x /= p_;
        }
        return;
    }
    // Coordinates in the ordered basis = inverse change-of-basis applied to
    // polynomial coordinates: x = sum_i out[i] * basis_[i].
    std::vector<uint32_t> pc = to_poly_coords(x, p_, r_);
    for (uint32_t i = 0; i < r_; ++i) {
        uint64_t acc = 0;
        for (uint32_t j = 0; j < r_; ++j) acc += (uint64_t)pc[j] * basis_inv_[j][i];
        out[i] = (uint32_t)(acc % p_);
    }
}

felem FieldCtx::from_coords(const uint32_t* in) const {
    if (basis_identity_) {
        felem out = 0, mult = 1;
        for (uint32_t i = 0; i < r_; ++i) {
            out += (in[i] % p_) * mult;
            mult *= p_;
        }
        return out;
    }
    std::vector<uint32_t> pc(r_, 0);
    for (uint32_t i = 0; i < r_; ++i)
        for (uint32_t j = 0; j < r_; ++j)
            pc[j] = (uint32_t)((pc[j] + (uint64_t)(in[i] % p_) * basis_[i][j]) % p_);
    felem out = 0, mult = 1;
    for (uint32_t j = 0; j < r_; ++j) {
        out += pc[j] * mult;
        mult *= p_;
    }
    return out;
}

std::string FieldCtx::describe() const {
    if (r_ == 1) return "F_" + std::to_string(p_);
    std::string m;
    for (size_t i = 0; i < modulus_.size(); ++i) m += (i ? "," : "") + std::to_string(modulus_[i]);
    return "F_" + std::to_string(p_) + "^" + std::to_string(r_) + " mod [" + m + "]";
}

} // namespace autoseq
