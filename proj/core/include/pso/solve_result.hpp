#pragma once

#include <optional>
#include <string>
#include <utility>

#include "pso/ordering.hpp"

namespace pso {

enum class SolveStatus {
    Found,      // an ordering extending the constraints exists and is returned
    Infeasible, // no ordering of the requested search extends the constraints
    NotInClass, // the graph failed (or could not pass) the solver's class check
};

const char* to_string(SolveStatus s);

/// Work counters for the linear-time claims: how many adjacency-list entries
/// and order-successor entries a solver touched.
struct SolveStats {
    long long adjacency_scans = 0;
    long long order_scans = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<Ordering> ordering; // engaged iff status == Found
    std::string reason;               // empty iff status == Found
    SolveStats stats;

    static SolveResult found(Ordering o) {
        SolveResult r;
        r.status = SolveStatus::Found;
        r.ordering = std::move(o);
        return r;
    }
    static SolveResult infeasible(std::string why) {
        SolveResult r;
        r.status = SolveStatus::Infeasible;
        r.reason = std::move(why);
        return r;
    }
    static SolveResult not_in_class(std::string why) {
        SolveResult r;
        r.status = SolveStatus::NotInClass;
        r.reason = std::move(why);
        return r;
    }
};

} // namespace pso
