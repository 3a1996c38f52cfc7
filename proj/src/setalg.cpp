#include "packnu/setalg.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace packnu {

namespace {

void check_same_group(const GroupSet& a, const GroupSet& b) {
    if (!(a.group() == b.group())) {
        throw std::invalid_argument("setalg: mismatched parent groups");
    }
}

}  // namespace

void translate_into(GroupSet& acc, elem x, const GroupSet& t) {
    const Group& g = acc.group();
    if (g.kind() == GroupKind::Cyclic) {
        // Translation in Z_n is a bit rotation by x.
        std::uint64_t n = g.order();
        auto src = t.words();
        auto dst = acc.mutable_words();
        t.for_each([&](elem e) {
            elem r = static_cast<elem>((std::uint64_t(e) + x) % n);
            dst[r >> 6] |= std::uint64_t{1} << (r & 63);
        });
        (void)src;
    } else {
        auto dst = acc.mutable_words();
        t.for_each([&](elem e) {
            elem r = g.op(x, e);
            dst[r >> 6] |= std::uint64_t{1} << (r & 63);
        });
    }
    acc.recount();
}

GroupSet translate(elem x, const GroupSet& t) {
    GroupSet out(t.group());
    translate_into(out, x, t);
    return out;
}

GroupSet product_set_serial(const GroupSet& a, const GroupSet& b) {
    check_same_group(a, b);
    GroupSet out(a.group());
    auto dst = out.mutable_words();
    const Group& g = a.group();
    a.for_each([&](elem x) {
        b.for_each([&](elem y) {
            elem r = g.op(x, y);
            dst[r >> 6] |= std::uint64_t{1} << (r & 63);
        });
    });
    out.recount();
    return out;
}

GroupSet product_set(const GroupSet& a, const GroupSet& b) {
    check_same_group(a, b);
#ifdef _OPENMP
    // Worth parallelizing only when the pair count is large.
    if (a.size() * b.size() >= 1u << 16 && omp_get_max_threads() > 1) {
        const Group& g = a.group();
        std::vector<elem> as = a.elements();
        GroupSet out(g);
        auto dst = out.mutable_words();
        std::size_t nwords = out.words().size();
#pragma omp parallel
        {
            GroupSet local(g);
            auto lw = local.mutable_words();
#pragma omp for schedule(static) nowait
            for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(as.size()); ++i) {
                b.for_each([&](elem y) {
                    elem r = g.op(as[i], y);
                    lw[r >> 6] |= std::uint64_t{1} << (r & 63);
                });
            }
#pragma omp critical
            for (std::size_t w = 0; w < nwords; ++w) dst[w] |= lw[w];
        }
        out.recount();
        return out;
    }
#endif
    return product_set_serial(a, b);
}

GroupSet inverse_set(const GroupSet& a) {
    const Group& g = a.group();
    GroupSet out(g);
    a.for_each([&](elem x) { out.add(g.inv(x)); });
    return out;
}

GroupSet ratio_set(const GroupSet& a) {
    if (a.empty()) throw std::invalid_argument("ratio_set: empty set");
    return product_set(a, inverse_set(a));
}

GroupSet symmetry_group(const GroupSet& t) {
    if (t.empty()) throw std::invalid_argument("symmetry_group: empty set");
    const Group& g = t.group();
    GroupSet out(g);
    for (elem x = 0; x < g.order(); ++x) {
        if (translate(x, t) == t) out.add(x);
    }
    return out;
}

}  // namespace packnu
