#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace berge {

enum class ErrorCode {
    duplicate_edge,
    wrong_edge_size,
    vertex_out_of_range,
    bad_intersection_size,
    target_too_large,
    syntax_error,
    not_a_tree,
    zero_size,
    multi_edge,
    loop,
    index_out_of_range,
    bad_parameters,
    odd_total,
    colliding_shifts,
    unknown_theorem,
    missing_param,
    unknown_suite,
    malformed_input,
    io_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` identifies the failure kind;
/// `position()` is a character offset for parse failures and npos otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::size_t position = npos)
        : std::runtime_error(message), code_(code), position_(position)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    std::size_t position() const noexcept { return position_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    ErrorCode code_;
    std::size_t position_;
};

} // namespace berge
