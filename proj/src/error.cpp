#include "stab/error.hpp"

namespace stab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::loop_rejected: return "LoopRejected";
        case Errc::vertex_out_of_range: return "VertexOutOfRange";
        case Errc::non_inverse_closed: return "NonInverseClosed";
        case Errc::zero_in_connection_set: return "ZeroInConnectionSet";
        case Errc::empty_subset: return "EmptySubset";
        case Errc::trivial_graph: return "TrivialGraph";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
        case Errc::bundle_involution_violated: return "BundleInvolutionViolated";
        case Errc::not_an_automorphism: return "NotAnAutomorphism";
        case Errc::not_a_boolean_square_edge: return "NotABooleanSquareEdge";
        case Errc::bad_parameters: return "BadParameters";
        case Errc::hypothesis_not_satisfied: return "HypothesisNotSatisfied";
        case Errc::complement_trivial: return "ComplementTrivial";
        case Errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

} // namespace stab
