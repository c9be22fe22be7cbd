#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hsw/graded.hpp"

namespace hsw {

/// One violated instance of an identity: the basis tuple and both evaluated sides.
struct Witness {
    /// Which sub-identity failed, e.g. "cyclic-identity" or "eq2".
    std::string identity;
    std::vector<std::size_t> indices;
    /// Display names of the tuple entries, aligned with `indices`.
    std::vector<std::string> tuple;
    Vector lhs;
    Vector rhs;
    /// Space the side values live in; its names render `lhs`/`rhs`.
    /// Scalar-valued identities use a one-dimensional space named "1".
    GradedSpace value_space;

    std::string lhs_text() const;
    std::string rhs_text() const;
};

/// Outcome of an identity check. The verdict is pass exactly when no witness was recorded.
class CheckReport {
public:
    CheckReport() = default;
    explicit CheckReport(std::string identity) : identity_(std::move(identity)) {}

    const std::string& identity() const { return identity_; }
    bool passed() const { return witnesses_.empty(); }
    const std::vector<Witness>& witnesses() const { return witnesses_; }

    /// Checkers stop recording after the first witness when this is set.
    bool stop_at_first() const { return stop_at_first_; }
    void set_stop_at_first(bool v) { stop_at_first_ = v; }
    bool done() const { return stop_at_first_ && !witnesses_.empty(); }

    void add(Witness w) { witnesses_.push_back(std::move(w)); }
    /// Appends the witnesses of `other`, prefixing their identity names with `prefix`.
    void merge(const CheckReport& other, const std::string& prefix = {});

    /// Free-form informational lines (e.g. side verdicts) carried along with the report.
    const std::vector<std::string>& notes() const { return notes_; }
    void note(std::string line) { notes_.push_back(std::move(line)); }

private:
    std::string identity_;
    std::vector<Witness> witnesses_;
    std::vector<std::string> notes_;
    bool stop_at_first_ = false;
};

/// Records a witness in `report` when `lhs != rhs`; returns true when they are equal.
bool expect_equal(CheckReport& report, const std::string& identity, const std::vector<std::size_t>& indices,
                  const std::vector<const GradedSpace*>& index_spaces, const Vector& lhs, const Vector& rhs,
                  const GradedSpace& value_space);

/// One-dimensional space used to render scalar witness values.
const GradedSpace& scalar_value_space();

} // namespace hsw
