#pragma once

#include <cstdint>
#include <vector>

#include "bounds.hpp"

namespace acmac {

struct SearchConfig {
    std::uint64_t seed = 20240501;
    int restarts = 4;       // random starting points per stage
    int ascent_steps = 30;  // gradient steps per (direction, model)
    double step_size = 0.5; // logit-space step length
    int n_dirs = 181;       // angular grid for boundary reports
    int threads = 1;

    void validate() const;
};

struct InnerTraceEntry {
    InnerParams params;
    BoundResult acmac;
    BoundResult accmac;
};

struct OuterTraceEntry {
    OuterParams params;
    BoundResult acmac;
    BoundResult accmac;
};

// Every parameter point evaluated during a search, with both the plain and
// the codeword-cognition pentagons. Both hulls are built from one shared
// trace, so the accmac hull is contained in the acmac hull by construction.
struct InnerSearchResult {
    RegionHull acmac_hull;
    RegionHull accmac_hull;
    std::vector<InnerTraceEntry> trace;
};

struct OuterSearchResult {
    RegionHull acmac_hull;
    RegionHull accmac_hull;
    std::vector<OuterTraceEntry> trace;
};

InnerSearchResult search_inner(const DiscreteChannel& ch, const DelaySet& ds,
                               const SearchConfig& cfg);

// Runs search_inner with the same config first and seeds the outer search
// with the blocked product extension of every inner trace entry, so the
// reported outer hull contains the reported inner hull.
OuterSearchResult search_outer(const DiscreteChannel& ch, const DelaySet& ds,
                               const SearchConfig& cfg);

RegionHull inner_region(const DiscreteChannel& ch, const DelaySet& ds, const SearchConfig& cfg);
RegionHull outer_region(const DiscreteChannel& ch, const DelaySet& ds, const SearchConfig& cfg);
RegionHull accmac_inner_region(const DiscreteChannel& ch, const DelaySet& ds,
                               const SearchConfig& cfg);
RegionHull accmac_outer_region(const DiscreteChannel& ch, const DelaySet& ds,
                               const SearchConfig& cfg);

// All count vectors of the given total over `cells` bins, scaled to pmfs.
std::vector<std::vector<double>> simplex_lattice(int cells, int total);

}  // namespace acmac
