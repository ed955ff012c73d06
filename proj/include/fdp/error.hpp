#pragma once

#include <stdexcept>
#include <string>

namespace fdp {

// Error categories shared by the C++ core and the C API.
enum class errc {
    ok = 0,
    invalid_parameter,
    size_limit,
    not_acyclic,
    parity_conflict,
    orientation_mismatch,
    unsupported,
    invalid_order,
    needs_perfect_matchings,
    out_of_scope,
    io_error,
    bad_format,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "ok";
        case errc::invalid_parameter: return "invalid-parameter";
        case errc::size_limit: return "size-limit";
        case errc::not_acyclic: return "not-acyclic";
        case errc::parity_conflict: return "parity-conflict";
        case errc::orientation_mismatch: return "orientation-mismatch";
        case errc::unsupported: return "unsupported";
        case errc::invalid_order: return "invalid-order";
        case errc::needs_perfect_matchings: return "normalize-requires-perfect";
        case errc::out_of_scope: return "out-of-scope";
        case errc::io_error: return "io-error";
        case errc::bad_format: return "bad-format";
        case errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace fdp
