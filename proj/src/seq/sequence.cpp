#include "seq/sequence.hpp"

#include <cmath>
#include <mutex>
#include <numeric>

#include "core/error.hpp"
#include "seq/sieve.hpp"

namespace autoseq {

namespace {

struct FloorPower {
    uint64_t num = 0;
    uint64_t den = 0;
    std::string text;
};

FloorPower parse_floor_power(const std::string& c_decimal) {
    auto dot = c_decimal.find('.');
    std::string ip = dot == std::string::npos ? c_decimal : c_decimal.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : c_decimal.substr(dot + 1);
    if (ip.empty() || ip.find_first_not_of("0123456789") != std::string::npos ||
        fp.find_first_not_of("0123456789") != std::string::npos)
        fail(errc::invalid_argument, "floor-power exponent must be a plain decimal");
    if (fp.size() > 4) fail(errc::cap_exceeded, "floor-power exponent capped at 4 decimals");
    uint64_t den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    uint64_t num = std::stoull(ip) * den + (fp.empty() ? 0 : std::stoull(fp));
    uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (!(num > den && num < 2 * den))
        fail(errc::invalid_argument, "floor-power exponent must satisfy 1 < c < 2");
    return FloorPower{num, den, c_decimal};
}

// floor(n^(num/den)) via a floating candidate certified by exact integer
// power comparison: m is the answer iff m^den <= n^num < (m+1)^den.
uint64_t floor_power_index(uint64_t n, uint64_t num, uint64_t den) {
    if (n <= 1) return n;
    BigUInt target = BigUInt::pow(BigUInt(n), num);
    long double guess = powl((long double)n, (long double)num / (long double)den);
    uint64_t m = guess < 1.0L ? 1 : (uint64_t)guess;
    auto too_big = [&](uint64_t v) { return BigUInt::pow(BigUInt(v), den) > target; };
    while (m > 1 && too_big(m)) --m;
    while (!too_big(m + 1)) ++m;
    return m;
}

} // namespace

struct SequenceHandle::Impl {
    enum class Kind { catalog, poly, primes, floorpow, geometric };

    std::string name;
    uint32_t alphabet = 2;
    Kind kind = Kind::catalog;

    // catalog
    CatalogDef cat;

    // transforms
    std::shared_ptr<const Impl> base;
    std::vector<int64_t> poly_coeffs;
    FloorPower fp;
    uint64_t geom = 0;

    mutable std::mutex mutex;
    mutable std::vector<uint8_t> cache;
    mutable std::shared_ptr<PrimeSieve> sieve;

    uint8_t point(const BigUInt& index) const {
        switch (kind) {
            case Kind::catalog:
                return cat.point(index);
            case Kind::poly:
                return base->point(eval_int_poly(poly_coeffs, index));
            case Kind::primes: {
                if (!index.fits_u64()) fail(errc::cap_exceeded, "prime index out of range");
                return base->point(BigUInt(sieve->prime((size_t)index.to_u64())));
            }
            case Kind::floorpow: {
                if (!index.fits_u64()) fail(errc::cap_exceeded, "floor-power index out of range");
                return base->point(BigUInt(floor_power_index(index.to_u64(), fp.num, fp.den)));
            }
            case Kind::geometric:
                if (!index.fits_u64()) fail(errc::cap_exceeded, "geometric index out of range");
                return base->point(BigUInt::pow(BigUInt(geom), index.to_u64()));
        }
        fail(errc::internal, "unreachable");
    }

    void extend_cache(size_t n) const {
        // mutex held by caller
        switch (kind) {
            case Kind::catalog:
                cat.extend(cache, n);
                return;
            case Kind::poly:
                for (size_t i = cache.size(); i < n; ++i)
                    cache.push_back(base->point(eval_int_poly(poly_coeffs, BigUInt(i))));
                return;
            case Kind::primes:
                for (size_t i = cache.size(); i < n; ++i)
                    cache.push_back(base->point(BigUInt(sieve->prime(i))));
                return;
            case Kind::floorpow:
                for (size_t i = cache.size(); i < n; ++i)
                    cache.push_back(base->point(BigUInt(floor_power_index(i, fp.num, fp.den))));
                return;
            case Kind::geometric: {
                BigUInt idx = BigUInt::pow(BigUInt(geom), cache.size());
                for (size_t i = cache.size(); i < n; ++i) {
                    cache.push_back(base->point(idx));
                    idx.mul_small(geom);
                }
                return;
            }
        }
    }
};

SequenceHandle SequenceHandle::create(const std::string& spec) {
    auto impl = std::make_shared<Impl>();
    impl->cat = catalog_lookup(spec);
    impl->name = impl->cat.name;
    impl->alphabet = impl->cat.alphabet;
    impl->kind = Impl::Kind::catalog;
    return SequenceHandle(std::move(impl));
}

SequenceHandle SequenceHandle::along_polynomial(std::vector<int64_t> coeffs) const {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(0);
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::poly;
    impl->base = impl_;
    impl->alphabet = impl_->alphabet;
    impl->poly_coeffs = std::move(coeffs);
    std::string c;
    for (size_t i = 0; i < impl->poly_coeffs.size(); ++i)
        c += (i ? "," : "") + std::to_string(impl->poly_coeffs[i]);
    impl->name = impl_->name + "|poly:" + c;
    return SequenceHandle(std::move(impl));
}

SequenceHandle SequenceHandle::along_primes() const {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::primes;
    impl->base = impl_;
    impl->alphabet = impl_->alphabet;
    impl->sieve = std::make_shared<PrimeSieve>();
    impl->name = impl_->name + "|primes";
    return SequenceHandle(std::move(impl));
}

SequenceHandle SequenceHandle::along_floor_power(const std::string& c_decimal) const {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::floorpow;
    impl->base = impl_;
    impl->alphabet = impl_->alphabet;
    impl->fp = parse_floor_power(c_decimal);
    impl->name = impl_->name + "|floorpow:" + impl->fp.text;
    return SequenceHandle(std::move(impl));
}

SequenceHandle SequenceHandle::along_geometric(uint64_t g) const {
    if (g < 2) fail(errc::invalid_argument, "geometric ratio must be >= 2");
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::geometric;
    impl->base = impl_;
    impl->alphabet = impl_->alphabet;
    impl->geom = g;
    impl->name = impl_->name + "|geom:" + std::to_string(g);
    return SequenceHandle(std::move(impl));
}

SequenceHandle SequenceHandle::transformed(const std::string& spec) const {
    auto colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "poly") {
        std::vector<int64_t> coeffs;
        size_t pos = 0;
        while (pos <= arg.size()) {
            auto comma = arg.find(',', pos);
            std::string tok = arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) fail(errc::invalid_argument, "poly transform: empty coefficient");
            coeffs.push_back(std::stoll(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return along_polynomial(std::move(coeffs));
    }
    if (kind == "squares") return along_polynomial({0, 0, 1});
    if (kind == "primes") return along_primes();
    if (kind == "floorpow") return along_floor_power(arg);
    if (kind == "geom" || kind == "geometric") return along_geometric(std::stoull(arg));
    fail(errc::unknown_name, "unknown transform: " + kind);
}

const std::string& SequenceHandle::name() const { return impl_->name; }
uint32_t SequenceHandle::alphabet() const { return impl_->alphabet; }
bool SequenceHandle::has_automaton() const {
    return impl_->kind == Impl::Kind::catalog && impl_->cat.automaton.has_value();
}
const AutomatonSpec* SequenceHandle::automaton() const {
    return has_automaton() ? &*impl_->cat.automaton : nullptr;
}

std::vector<uint8_t> SequenceHandle::prefix(size_t n) const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    if (impl_->cache.size() < n) impl_->extend_cache(n);
    return std::vector<uint8_t>(impl_->cache.begin(), impl_->cache.begin() + n);
}

uint8_t SequenceHandle::at(const BigUInt& index) const { return impl_->point(index); }

bool SequenceHandle::cross_check(size_t n) const {
    if (impl_->kind != Impl::Kind::catalog || !impl_->cat.automaton)
        fail(errc::invalid_argument, "cross_check needs a catalog entry with both definitions");
    auto rec = prefix(n);
    const auto& a = *impl_->cat.automaton;
    for (size_t i = 0; i < n; ++i) {
        if (a.eval((uint64_t)i) != rec[i]) return false;
    }
    return true;
}

} // namespace autoseq
