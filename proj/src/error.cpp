#include <berge/error.hpp>

namespace berge {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::wrong_edge_size: return "WrongEdgeSize";
    case ErrorCode::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorCode::bad_intersection_size: return "BadIntersectionSize";
    case ErrorCode::target_too_large: return "TargetTooLarge";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::not_a_tree: return "NotATree";
    case ErrorCode::zero_size: return "ZeroSize";
    case ErrorCode::multi_edge: return "MultiEdge";
    case ErrorCode::loop: return "Loop";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::bad_parameters: return "BadParameters";
    case ErrorCode::odd_total: return "OddTotal";
    case ErrorCode::colliding_shifts: return "CollidingShifts";
    case ErrorCode::unknown_theorem: return "UnknownTheorem";
    case ErrorCode::missing_param: return "MissingParam";
    case ErrorCode::unknown_suite: return "UnknownSuite";
    case ErrorCode::malformed_input: return "MalformedInput";
    case ErrorCode::io_error: return "IoError";
    }
    return "Unknown";
}

} // namespace berge
