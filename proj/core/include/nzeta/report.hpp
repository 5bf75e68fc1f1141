#pragma once

#include <cstdint>
#include <string>

#include "nzeta/catalog.hpp"

namespace nzeta {

struct RunConfig {
    mpfr_prec_t precision = 128;
    double tolerance = 1e-9;
    long long samples = 1000;
    std::uint64_t seed = 1;
    int rank_lo = 1;
    int rank_hi = 3;
};

/// JSON documents per CLI command. Exact quantities appear as integer-ratio
/// strings; floats as fixed-digit decimal strings, so output is lossless and
/// byte-stable across runs.
std::string artin_report(const Curve& c, const RunConfig& cfg);
std::string bundle_report(const Curve& c, int n, const RunConfig& cfg);
std::string invariants_report(const Curve& c, int n, const RunConfig& cfg);
std::string rh_report(const Curve& c, int n, const RunConfig& cfg);
std::string bounds_report(const Curve& c, int n, const RunConfig& cfg);
std::string miracle_report(const Curve& c, int max_rank, const RunConfig& cfg);
std::string rank3_report(const Curve& c, const RunConfig& cfg);

/// Everything, for every curve of the catalog.
std::string full_report(const Catalog& cat, const RunConfig& cfg);

/// Zero-scatter table: curve,rank,root_re,root_im,modulus,re_s. Includes the
/// rank-3 upper-half numerator roots as rank "3:ge2".
std::string scatter_csv(const Catalog& cat, const RunConfig& cfg);

}  // namespace nzeta
