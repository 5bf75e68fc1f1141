#include "nzeta/compositions.hpp"

#include "nzeta/errors.hpp"

namespace nzeta {

namespace {

void extend(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition{prefix, 0});
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        extend(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(int m) {
    if (m < 0) throw DomainViolation("compositions of a negative integer");
    std::vector<Composition> out;
    out.reserve(m == 0 ? 1 : (1u << (m - 1)));
    std::vector<int> prefix;
    extend(m, prefix, out);
    for (auto& c : out) {
        c.total = 0;
        for (int p : c.parts) c.total += p;
    }
    return out;
}

}  // namespace nzeta
