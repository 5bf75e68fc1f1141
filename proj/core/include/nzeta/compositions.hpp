#pragma once

#include <vector>

namespace nzeta {

/// Ordered tuple of positive integers with a prescribed sum. The empty
/// composition (of 0) is valid.
struct Composition {
    std::vector<int> parts;
    int total = 0;
};

/// All compositions of m in lexicographic order of the part lists.
/// m = 0 yields exactly the empty composition; m >= 1 yields 2^{m-1}.
std::vector<Composition> compositions(int m);

}  // namespace nzeta
