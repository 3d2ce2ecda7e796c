#pragma once

#include <stdexcept>
#include <string>

namespace schurid {

// Stable error codes, mirrored one-to-one by the C API status values.
enum class errc : int {
    ok = 0,
    not_weakly_decreasing,
    not_strictly_decreasing,
    negative_part,
    n_too_small,
    row_out_of_range,
    invalid_start_box,
    invalid_strip_spec,
    shift_undefined,
    empty_partition,
    repeated_coordinates,
    height_exceeds_variables,
    size_too_small,
    too_large,
    variable_count_too_small,
    size_mismatch,
    height_too_small,
    invalid_range,
    parse_error,
    internal,
};

class schur_error : public std::runtime_error {
public:
    schur_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "ok";
        case errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
        case errc::not_strictly_decreasing: return "NotStrictlyDecreasing";
        case errc::negative_part: return "NegativePart";
        case errc::n_too_small: return "NTooSmall";
        case errc::row_out_of_range: return "RowOutOfRange";
        case errc::invalid_start_box: return "InvalidStartBox";
        case errc::invalid_strip_spec: return "InvalidStripSpec";
        case errc::shift_undefined: return "ShiftUndefined";
        case errc::empty_partition: return "EmptyPartition";
        case errc::repeated_coordinates: return "RepeatedCoordinates";
        case errc::height_exceeds_variables: return "HeightExceedsVariables";
        case errc::size_too_small: return "SizeTooSmall";
        case errc::too_large: return "TooLarge";
        case errc::variable_count_too_small: return "VariableCountTooSmall";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::height_too_small: return "HeightTooSmall";
        case errc::invalid_range: return "InvalidRange";
        case errc::parse_error: return "ParseError";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace schurid
