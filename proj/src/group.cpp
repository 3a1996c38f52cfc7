#include "packnu/group.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace packnu {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set proven sufficient for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 Group::max_order() {
    if (const char* env = std::getenv("PACKNU_MAX_ORDER")) {
        char* end = nullptr;
        u64 v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxOrder;
}

Group Group::cyclic(u64 n) {
    if (n == 0) throw std::invalid_argument("cyclic group: modulus must be positive");
    if (n > max_order()) throw std::invalid_argument("cyclic group: order exceeds cap");
    return Group(GroupKind::Cyclic, n);
}

Group Group::product(std::vector<u64> moduli) {
    if (moduli.empty()) throw std::invalid_argument("product group: no moduli");
    u64 order = 1;
    for (u64 m : moduli) {
        if (m == 0) throw std::invalid_argument("product group: modulus must be positive");
        if (order > max_order() / m) throw std::invalid_argument("product group: order exceeds cap");
        order *= m;
    }
    Group g(GroupKind::Product, order);
    g.moduli_ = std::move(moduli);
    return g;
}

Group Group::mult_mod_p(u64 p) {
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("mult_mod_p: " + std::to_string(p) + " is not prime");
    }
    if (p - 1 > max_order()) throw std::invalid_argument("mult_mod_p: order exceeds cap");
    Group g(GroupKind::MultModP, p - 1);
    g.p_ = p;
    return g;
}

Group Group::parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("group spec '" + spec + "': expected kind:args");
    }
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    auto parse_u64 = [&](const std::string& s) {
        std::size_t pos = 0;
        u64 v;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("group spec: bad integer '" + s + "'");
        }
        if (pos != s.size()) throw std::invalid_argument("group spec: bad integer '" + s + "'");
        return v;
    };
    if (kind == "cyclic") return cyclic(parse_u64(args));
    if (kind == "multmod") return mult_mod_p(parse_u64(args));
    if (kind == "product") {
        std::vector<u64> moduli;
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, 'x')) moduli.push_back(parse_u64(tok));
        return product(std::move(moduli));
    }
    throw std::invalid_argument("group spec: unknown kind '" + kind + "'");
}

elem Group::op(elem x, elem y) const {
    switch (kind_) {
        case GroupKind::Cyclic:
            return static_cast<elem>((u64(x) + y) % order_);
        case GroupKind::MultModP:
            return static_cast<elem>((u64(x) + 1) * (u64(y) + 1) % p_ - 1);
        case GroupKind::Product: {
            u64 rx = x, ry = y, result = 0, stride = 1;
            for (u64 m : moduli_) {
                u64 cx = rx % m, cy = ry % m;
                result += ((cx + cy) % m) * stride;
                stride *= m;
                rx /= m;
                ry /= m;
            }
            return static_cast<elem>(result);
        }
    }
    return 0;
}

elem Group::inv(elem x) const {
    switch (kind_) {
        case GroupKind::Cyclic:
            return static_cast<elem>(x == 0 ? 0 : order_ - x);
        case GroupKind::MultModP:
            return static_cast<elem>(powmod(u64(x) + 1, p_ - 2, p_) - 1);
        case GroupKind::Product: {
            u64 rx = x, result = 0, stride = 1;
            for (u64 m : moduli_) {
                u64 cx = rx % m;
                result += (cx == 0 ? 0 : m - cx) * stride;
                stride *= m;
                rx /= m;
            }
            return static_cast<elem>(result);
        }
    }
    return 0;
}

std::string Group::label(elem x) const {
    switch (kind_) {
        case GroupKind::Cyclic:
            return std::to_string(x);
        case GroupKind::MultModP:
            return std::to_string(u64(x) + 1);
        case GroupKind::Product: {
            std::string s;
            u64 rx = x;
            for (std::size_t i = 0; i < moduli_.size(); ++i) {
                if (i) s += '.';
                s += std::to_string(rx % moduli_[i]);
                rx /= moduli_[i];
            }
            return s;
        }
    }
    return {};
}

std::optional<elem> Group::from_label(const std::string& s) const {
    auto parse_u64 = [](const std::string& t) -> std::optional<u64> {
        if (t.empty()) return std::nullopt;
        std::size_t pos = 0;
        u64 v;
        try {
            v = std::stoull(t, &pos);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (pos != t.size()) return std::nullopt;
        return v;
    };
    switch (kind_) {
        case GroupKind::Cyclic: {
            auto v = parse_u64(s);
            if (!v || *v >= order_) return std::nullopt;
            return static_cast<elem>(*v);
        }
        case GroupKind::MultModP: {
            auto v = parse_u64(s);
            if (!v || *v < 1 || *v > p_ - 1) return std::nullopt;
            return static_cast<elem>(*v - 1);
        }
        case GroupKind::Product: {
            std::stringstream ss(s);
            std::string tok;
            u64 result = 0, stride = 1;
            std::size_t i = 0;
            while (std::getline(ss, tok, '.')) {
                if (i >= moduli_.size()) return std::nullopt;
                auto v = parse_u64(tok);
                if (!v || *v >= moduli_[i]) return std::nullopt;
                result += *v * stride;
                stride *= moduli_[i];
                ++i;
            }
            if (i != moduli_.size()) return std::nullopt;
            return static_cast<elem>(result);
        }
    }
    return std::nullopt;
}

std::string Group::spec_string() const {
    switch (kind_) {
        case GroupKind::Cyclic:
            return "cyclic:" + std::to_string(order_);
        case GroupKind::MultModP:
            return "multmod:" + std::to_string(p_);
        case GroupKind::Product: {
            std::string s = "product:";
            for (std::size_t i = 0; i < moduli_.size(); ++i) {
                if (i) s += 'x';
                s += std::to_string(moduli_[i]);
            }
            return s;
        }
    }
    return {};
}

}  // namespace packnu
