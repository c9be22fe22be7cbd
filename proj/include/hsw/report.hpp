#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsw/check_report.hpp"
#include "hsw/scalar.hpp"

namespace hsw {

/// A witness flattened to text, ready for emission.
struct WitnessRecord {
    /// Check that produced it, e.g. "hom-jordan".
    std::string check;
    std::string identity;
    std::vector<std::string> tuple;
    /// Side values as linear combinations, e.g. "1/4 e".
    std::string lhs;
    std::string rhs;
    /// Coordinates in serialized scalar form ("p/q" or "k mod p").
    std::vector<std::string> lhs_coefficients;
    std::vector<std::string> rhs_coefficients;

    friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct CheckLine {
    std::string name;
    bool passed = true;
    /// Informational checks are printed but do not affect the verdict.
    bool informational = false;

    friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

/// Outcome of one CLI command.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string field;
    std::string banner;
    std::vector<CheckLine> checks;
    std::vector<WitnessRecord> witnesses;
    /// Result blocks, tables and notes, one line each.
    std::vector<std::string> details;
    std::optional<std::uint64_t> frozen_count;
    /// Set explicitly for verdicts not expressed as checks (e.g. a frozen-count mismatch).
    bool forced_failure = false;

    /// Pass exactly when no counted check failed and no failure was forced.
    bool verdict() const;

    void set_field(Field f);
    /// Records a check line, its witnesses and its notes.
    void add_check(const std::string& name, const CheckReport& r, bool informational = false);
    void add_detail_block(const std::string& text);

    friend bool operator==(const Report&, const Report&) = default;
};

/// "characteristic 0: ..." or "characteristic p: ..." caveat line.
std::string characteristic_banner(Field f);

std::string emit_text(const Report& r);
/// JSON document with fields command, inputs, verdict, witnesses, field, characteristic-banner,
/// checks, details and (when present) frozen-count. Keys are emitted in a fixed order.
std::string emit_json(const Report& r);
/// Inverse of emit_json. Throws Error on malformed input.
Report parse_json_report(const std::string& text);

} // namespace hsw
