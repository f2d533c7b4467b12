#ifndef VMINOR_ERROR_HPP
#define VMINOR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace vminor
{

enum class ErrorKind
{
    invalid_parameter,
    malformed_input,
    out_of_range,
    not_an_edge,
    part_too_small,
    size_limit_exceeded,
    budget_exhausted,
    disconnected_input,
    too_small,
    invalid_witness,
    invariant_violation,
    precondition_violation,
    verification_failed,
    improper_coloring,
    partial_coloring,
    not_induced_path,
    degenerate_input,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI) can react without parsing messages.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string & message);

    auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

/// Raised by graph6 / edge-list / JSON decoders; offset is the byte position
/// where decoding stopped.
class MalformedInput : public Error
{
public:
    MalformedInput(std::size_t offset, const std::string & message);

    auto offset() const noexcept -> std::size_t { return _offset; }

private:
    std::size_t _offset;
};

} // namespace vminor

#endif
