#include "spl/errors.hpp"

namespace spl {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::self_loop: return "SelfLoop";
    case Errc::empty_query: return "EmptyQuery";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::domain_error: return "DomainError";
    case Errc::not_prime: return "NotPrime";
    case Errc::too_small: return "TooSmall";
    case Errc::not_connected: return "NotConnected";
    case Errc::not_in_triangle: return "NotInTriangle";
    case Errc::hypothesis_unmet: return "HypothesisUnmet";
    case Errc::overlap: return "Overlap";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::not_triangle_connected: return "NotTriangleConnected";
    case Errc::too_large: return "TooLarge";
    case Errc::sigma_condition_fails: return "SigmaConditionFails";
    case Errc::not_a_path: return "NotAPath";
    case Errc::no_triangle: return "NoTriangle";
    case Errc::length_unreachable: return "LengthUnreachable";
    case Errc::five: return "Five";
    case Errc::not_a_walk: return "NotAWalk";
    case Errc::bad_orientation: return "BadOrientation";
    case Errc::construction_stuck: return "ConstructionStuck";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace spl
