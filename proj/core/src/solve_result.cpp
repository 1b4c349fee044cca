#include "pso/solve_result.hpp"

namespace pso {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "found";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::NotInClass: return "not-in-class";
    }
    return "?";
}

} // namespace pso
