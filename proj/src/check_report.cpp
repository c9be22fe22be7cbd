#include "hsw/check_report.hpp"

namespace hsw {

namespace {

std::string format_value(const Vector& v, const GradedSpace& space)
{
    if (space.dim() == 1 && space.name(0) == "1" && v.size() == 1)
        return v[0].to_short_string();
    return format_combination(v, space);
}

} // namespace

std::string Witness::lhs_text() const
{
    return format_value(lhs, value_space);
}

std::string Witness::rhs_text() const
{
    return format_value(rhs, value_space);
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix)
{
    for (const auto& n : other.notes_)
        notes_.push_back(n);
    for (auto w : other.witnesses_) {
        if (done())
            return;
        if (!prefix.empty())
            w.identity = prefix + ":" + w.identity;
        witnesses_.push_back(std::move(w));
    }
}

bool expect_equal(CheckReport& report, const std::string& identity, const std::vector<std::size_t>& indices,
                  const std::vector<const GradedSpace*>& index_spaces, const Vector& lhs, const Vector& rhs,
                  const GradedSpace& value_space)
{
    if (lhs == rhs)
        return true;
    Witness w;
    w.identity = identity;
    w.indices = indices;
    for (std::size_t k = 0; k < indices.size(); ++k)
        w.tuple.push_back(index_spaces.at(k)->name(indices[k]));
    w.lhs = lhs;
    w.rhs = rhs;
    w.value_space = value_space;
    report.add(std::move(w));
    return false;
}

const GradedSpace& scalar_value_space()
{
    static const GradedSpace space({Parity::even}, {"1"});
    return space;
}

} // namespace hsw
