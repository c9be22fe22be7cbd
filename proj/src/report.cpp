#include "hsw/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hsw {

using ordered_json = nlohmann::ordered_json;

bool Report::verdict() const
{
    if (forced_failure)
        return false;
    for (const auto& c : checks)
        if (!c.informational && !c.passed)
            return false;
    return true;
}

void Report::set_field(Field f)
{
    field = f.name();
    banner = characteristic_banner(f);
}

void Report::add_check(const std::string& name, const CheckReport& r, bool informational)
{
    checks.push_back({name, r.passed(), informational});
    for (const auto& w : r.witnesses()) {
        WitnessRecord rec;
        rec.check = name;
        rec.identity = w.identity;
        rec.tuple = w.tuple;
        rec.lhs = w.lhs_text();
        rec.rhs = w.rhs_text();
        for (const auto& s : w.lhs)
            rec.lhs_coefficients.push_back(s.to_string());
        for (const auto& s : w.rhs)
            rec.rhs_coefficients.push_back(s.to_string());
        witnesses.push_back(std::move(rec));
    }
    for (const auto& n : r.notes())
        details.push_back(name + ": " + n);
}

void Report::add_detail_block(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        details.push_back(line);
}

std::string characteristic_banner(Field f)
{
    if (f.is_rational())
        return "characteristic 0: exact rational arithmetic";
    const auto p = std::to_string(f.characteristic());
    std::string s = "characteristic " + p + ": verdicts hold over GF(" + p + ") and need not transfer to characteristic 0";
    if (f.characteristic() == 2)
        s += "; Koszul signs are trivial";
    return s;
}

namespace {

std::string tuple_text(const std::vector<std::string>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + t[i];
    return s + ")";
}

} // namespace

std::string emit_text(const Report& r)
{
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    for (const auto& [k, v] : r.inputs)
        out << "input " << k << ": " << v << "\n";
    out << "field: " << r.field << "\n";
    out << r.banner << "\n";
    for (const auto& c : r.checks)
        out << "check " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << (c.informational ? " (informational)" : "")
            << "\n";
    if (r.frozen_count)
        out << "frozen-count: " << *r.frozen_count << "\n";
    for (const auto& d : r.details)
        out << "  " << d << "\n";
    out << "witnesses: " << r.witnesses.size() << "\n";
    for (const auto& w : r.witnesses)
        out << "  [" << w.check << "] " << w.identity << " at " << tuple_text(w.tuple) << ": lhs = " << w.lhs
            << ", rhs = " << w.rhs << "\n";
    out << "verdict: " << (r.verdict() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string emit_json(const Report& r)
{
    ordered_json j;
    j["command"] = r.command;
    ordered_json inputs = ordered_json::object();
    for (const auto& [k, v] : r.inputs)
        inputs[k] = v;
    j["inputs"] = inputs;
    j["verdict"] = r.verdict() ? "PASS" : "FAIL";
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses) {
        ordered_json x;
        x["check"] = w.check;
        x["identity"] = w.identity;
        x["tuple"] = w.tuple;
        x["lhs"] = w.lhs;
        x["rhs"] = w.rhs;
        x["lhs-coefficients"] = w.lhs_coefficients;
        x["rhs-coefficients"] = w.rhs_coefficients;
        ws.push_back(std::move(x));
    }
    j["witnesses"] = ws;
    j["field"] = r.field;
    j["characteristic-banner"] = r.banner;
    ordered_json cs = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json x;
        x["name"] = c.name;
        x["verdict"] = c.passed ? "PASS" : "FAIL";
        x["informational"] = c.informational;
        cs.push_back(std::move(x));
    }
    j["checks"] = cs;
    j["details"] = r.details;
    if (r.frozen_count)
        j["frozen-count"] = *r.frozen_count;
    if (r.forced_failure)
        j["forced-failure"] = true;
    return j.dump(2) + "\n";
}

Report parse_json_report(const std::string& text)
{
    try {
        const auto j = ordered_json::parse(text);
        Report r;
        r.command = j.at("command").get<std::string>();
        for (const auto& [k, v] : j.at("inputs").items())
            r.inputs.emplace_back(k, v.get<std::string>());
        r.field = j.at("field").get<std::string>();
        r.banner = j.at("characteristic-banner").get<std::string>();
        for (const auto& x : j.at("witnesses")) {
            WitnessRecord w;
            w.check = x.at("check").get<std::string>();
            w.identity = x.at("identity").get<std::string>();
            w.tuple = x.at("tuple").get<std::vector<std::string>>();
            w.lhs = x.at("lhs").get<std::string>();
            w.rhs = x.at("rhs").get<std::string>();
            w.lhs_coefficients = x.at("lhs-coefficients").get<std::vector<std::string>>();
            w.rhs_coefficients = x.at("rhs-coefficients").get<std::vector<std::string>>();
            r.witnesses.push_back(std::move(w));
        }
        for (const auto& x : j.at("checks"))
            r.checks.push_back(
                {x.at("name").get<std::string>(), x.at("verdict") == "PASS", x.at("informational").get<bool>()});
        r.details = j.at("details").get<std::vector<std::string>>();
        if (j.contains("frozen-count"))
            r.frozen_count = j.at("frozen-count").get<std::uint64_t>();
        r.forced_failure = j.value("forced-failure", false);
        if ((j.at("verdict") == "PASS") != r.verdict())
            throw Error("report verdict is inconsistent with its checks");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
}

} // namespace hsw
