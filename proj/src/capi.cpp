#include "schurid.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "identity.hpp"
#include "identity_gen.hpp"
#include "oracle.hpp"
#include "plucker.hpp"

struct schurid_identity {
    schurid::Identity value;
};

namespace {

thread_local std::string g_last_error;

schurid_status map_errc(schurid::errc c) {
    using schurid::errc;
    switch (c) {
        case errc::ok: return SCHURID_OK;
        case errc::not_weakly_decreasing: return SCHURID_ERR_NOT_WEAKLY_DECREASING;
        case errc::not_strictly_decreasing: return SCHURID_ERR_NOT_STRICTLY_DECREASING;
        case errc::negative_part: return SCHURID_ERR_NEGATIVE_PART;
        case errc::n_too_small: return SCHURID_ERR_N_TOO_SMALL;
        case errc::row_out_of_range: return SCHURID_ERR_ROW_OUT_OF_RANGE;
        case errc::invalid_start_box: return SCHURID_ERR_INVALID_START_BOX;
        case errc::invalid_strip_spec: return SCHURID_ERR_INVALID_STRIP_SPEC;
        case errc::shift_undefined: return SCHURID_ERR_SHIFT_UNDEFINED;
        case errc::empty_partition: return SCHURID_ERR_EMPTY_PARTITION;
        case errc::repeated_coordinates: return SCHURID_ERR_REPEATED_COORDINATES;
        case errc::height_exceeds_variables: return SCHURID_ERR_HEIGHT_EXCEEDS_VARIABLES;
        case errc::size_too_small: return SCHURID_ERR_SIZE_TOO_SMALL;
        case errc::too_large: return SCHURID_ERR_TOO_LARGE;
        case errc::variable_count_too_small: return SCHURID_ERR_VARIABLE_COUNT_TOO_SMALL;
        case errc::size_mismatch: return SCHURID_ERR_SIZE_MISMATCH;
        case errc::height_too_small: return SCHURID_ERR_HEIGHT_TOO_SMALL;
        case errc::invalid_range: return SCHURID_ERR_INVALID_RANGE;
        case errc::parse_error: return SCHURID_ERR_PARSE;
        case errc::internal: return SCHURID_ERR_INTERNAL;
    }
    return SCHURID_ERR_INTERNAL;
}

template <typename Fn>
schurid_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SCHURID_OK;
    } catch (const schurid::schur_error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SCHURID_ERR_INTERNAL;
    }
}

schurid::Partition read_partition(const int* parts, size_t len) {
    if (parts == nullptr && len != 0) {
        throw schurid::schur_error(schurid::errc::invalid_range, "null partition pointer");
    }
    return schurid::Partition(std::vector<int>(parts, parts + len));
}

std::vector<schurid::StripSpec> read_specs(const schurid_strip_spec* specs, size_t nspecs) {
    if (specs == nullptr && nspecs != 0) {
        throw schurid::schur_error(schurid::errc::invalid_range, "null spec pointer");
    }
    std::vector<schurid::StripSpec> out;
    out.reserve(nspecs);
    for (size_t i = 0; i < nspecs; ++i) {
        out.push_back(schurid::StripSpec{specs[i].r, specs[i].m, specs[i].t});
    }
    return out;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

schurid_status make_identity(schurid_identity** out, schurid::Identity id) {
    *out = new schurid_identity{std::move(id)};
    return SCHURID_OK;
}

} // namespace

extern "C" {

const char* schurid_status_name(schurid_status status) {
    switch (status) {
        case SCHURID_OK: return "ok";
        case SCHURID_ERR_NOT_WEAKLY_DECREASING: return "NotWeaklyDecreasing";
        case SCHURID_ERR_NOT_STRICTLY_DECREASING: return "NotStrictlyDecreasing";
        case SCHURID_ERR_NEGATIVE_PART: return "NegativePart";
        case SCHURID_ERR_N_TOO_SMALL: return "NTooSmall";
        case SCHURID_ERR_ROW_OUT_OF_RANGE: return "RowOutOfRange";
        case SCHURID_ERR_INVALID_START_BOX: return "InvalidStartBox";
        case SCHURID_ERR_INVALID_STRIP_SPEC: return "InvalidStripSpec";
        case SCHURID_ERR_SHIFT_UNDEFINED: return "ShiftUndefined";
        case SCHURID_ERR_EMPTY_PARTITION: return "EmptyPartition";
        case SCHURID_ERR_REPEATED_COORDINATES: return "RepeatedCoordinates";
        case SCHURID_ERR_HEIGHT_EXCEEDS_VARIABLES: return "HeightExceedsVariables";
        case SCHURID_ERR_SIZE_TOO_SMALL: return "SizeTooSmall";
        case SCHURID_ERR_TOO_LARGE: return "TooLarge";
        case SCHURID_ERR_VARIABLE_COUNT_TOO_SMALL: return "VariableCountTooSmall";
        case SCHURID_ERR_SIZE_MISMATCH: return "SizeMismatch";
        case SCHURID_ERR_HEIGHT_TOO_SMALL: return "HeightTooSmall";
        case SCHURID_ERR_INVALID_RANGE: return "InvalidRange";
        case SCHURID_ERR_PARSE: return "ParseError";
        case SCHURID_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* schurid_last_error(void) { return g_last_error.c_str(); }

schurid_status schurid_identity_main(const int* lambda, size_t lambda_len,
                                     const schurid_strip_spec* specs, size_t nspecs,
                                     schurid_identity** out) {
    return guarded([&] {
        make_identity(out, schurid::main_identity(read_partition(lambda, lambda_len),
                                                  read_specs(specs, nspecs)));
    });
}

schurid_status schurid_identity_barred(const int* lambda, size_t lambda_len,
                                       const schurid_strip_spec* specs, size_t nspecs,
                                       schurid_axis axis, schurid_identity** out) {
    return guarded([&] {
        make_identity(out, schurid::barred_identity(
                               read_partition(lambda, lambda_len), read_specs(specs, nspecs),
                               axis == SCHURID_AXIS_ROW ? schurid::Axis::row
                                                        : schurid::Axis::column));
    });
}

schurid_status schurid_identity_square(const int* lambda, size_t lambda_len,
                                       schurid_identity** out) {
    return guarded([&] {
        make_identity(out, schurid::square_identity(read_partition(lambda, lambda_len)));
    });
}

schurid_status schurid_identity_square_via_nu(const int* lambda, size_t lambda_len,
                                              schurid_identity** out) {
    return guarded([&] {
        make_identity(out, schurid::square_identity_via_nu(read_partition(lambda, lambda_len)));
    });
}

schurid_status schurid_identity_fulmek_kleber(const int* lambda, size_t lambda_len,
                                              schurid_identity** out) {
    return guarded([&] {
        make_identity(out, schurid::fulmek_kleber_identity(read_partition(lambda, lambda_len)));
    });
}

schurid_status schurid_identity_gps(int a, int b, int m, int n, schurid_identity** out) {
    return guarded([&] { make_identity(out, schurid::gps_identity(a, b, m, n)); });
}

schurid_status schurid_identity_derive_plucker(const int* lambda, size_t lambda_len,
                                               const schurid_strip_spec* specs, size_t nspecs,
                                               int big_n, schurid_identity** out) {
    return guarded([&] {
        auto p = read_partition(lambda, lambda_len);
        int n = big_n > 0 ? big_n : static_cast<int>(p.height()) + 1;
        make_identity(out, schurid::derive_main_identity(p, read_specs(specs, nspecs), n));
    });
}

schurid_status schurid_identity_conjugate(const schurid_identity* id, schurid_identity** out) {
    return guarded([&] { make_identity(out, schurid::conjugate_identity(id->value)); });
}

schurid_status schurid_identity_parse_json(const char* text, schurid_identity** out) {
    return guarded([&] {
        if (text == nullptr) {
            throw schurid::schur_error(schurid::errc::parse_error, "null JSON text");
        }
        make_identity(out, schurid::Identity::from_json(text));
    });
}

schurid_status schurid_identity_render(const schurid_identity* id, schurid_format format,
                                       char** out) {
    return guarded([&] {
        *out = dup_string(format == SCHURID_FORMAT_LATEX ? id->value.to_latex()
                                                         : id->value.to_json());
    });
}

schurid_status schurid_identity_equal(const schurid_identity* x, const schurid_identity* y,
                                      int* out) {
    return guarded([&] { *out = (x->value == y->value) ? 1 : 0; });
}

schurid_status schurid_identity_verify(const schurid_identity* id, int vars, int trials,
                                       uint64_t seed, char** report_json, int* verified) {
    return guarded([&] {
        int m = vars > 0 ? vars : schurid::default_verify_vars(id->value);
        auto report = schurid::verify_identity(id->value, m, trials, seed);
        if (report_json != nullptr) *report_json = dup_string(report.to_json());
        if (verified != nullptr) *verified = report.verified ? 1 : 0;
    });
}

void schurid_identity_free(schurid_identity* id) { delete id; }

void schurid_string_free(char* s) { delete[] s; }

schurid_status schurid_enumerate_specs(const int* lambda, size_t lambda_len, int max_k,
                                       char** json_out) {
    return guarded([&] {
        auto lists = schurid::enumerate_specs(read_partition(lambda, lambda_len), max_k);
        nlohmann::json j = nlohmann::json::array();
        for (const auto& list : lists) {
            nlohmann::json jl = nlohmann::json::array();
            for (const auto& s : list) jl.push_back({s.r, s.m, s.t});
            j.push_back(std::move(jl));
        }
        *json_out = dup_string(j.dump());
    });
}

schurid_status schurid_plucker_selftest(int max_size, int trials, uint64_t seed,
                                        int* trials_run, int* failures) {
    return guarded([&] {
        auto report = schurid::plucker_selftest(max_size, trials, seed);
        if (trials_run != nullptr) *trials_run = report.trials;
        if (failures != nullptr) *failures = report.failures;
    });
}

} // extern "C"
