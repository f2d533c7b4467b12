#include <vminor/error.hpp>

namespace vminor
{

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::malformed_input: return "malformed-input";
        case ErrorKind::out_of_range: return "out-of-range";
        case ErrorKind::not_an_edge: return "not-an-edge";
        case ErrorKind::part_too_small: return "part-too-small";
        case ErrorKind::size_limit_exceeded: return "size-limit-exceeded";
        case ErrorKind::budget_exhausted: return "budget-exhausted";
        case ErrorKind::disconnected_input: return "disconnected-input";
        case ErrorKind::too_small: return "too-small";
        case ErrorKind::invalid_witness: return "invalid-witness";
        case ErrorKind::invariant_violation: return "invariant-violation";
        case ErrorKind::precondition_violation: return "precondition-violation";
        case ErrorKind::verification_failed: return "verification-failed";
        case ErrorKind::improper_coloring: return "oracle-returned-improper-coloring";
        case ErrorKind::partial_coloring: return "partial-coloring";
        case ErrorKind::not_induced_path: return "not-induced-path";
        case ErrorKind::degenerate_input: return "degenerate-input";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string(to_string(kind)) + ": " + message),
    _kind(kind)
{
}

MalformedInput::MalformedInput(std::size_t offset, const std::string & message) :
    Error(ErrorKind::malformed_input, message + " (at byte " + std::to_string(offset) + ")"),
    _offset(offset)
{
}

} // namespace vminor
