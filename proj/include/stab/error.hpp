#pragma once

#include <stdexcept>
#include <string>

namespace stab {

enum class Errc {
    loop_rejected,
    vertex_out_of_range,
    non_inverse_closed,
    zero_in_connection_set,
    empty_subset,
    trivial_graph,
    degree_mismatch,
    search_budget_exceeded,
    bundle_involution_violated,
    not_an_automorphism,
    not_a_boolean_square_edge,
    bad_parameters,
    hypothesis_not_satisfied,
    complement_trivial,
    parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace stab
