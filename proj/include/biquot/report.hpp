#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace biquot {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

/// One verified item (a table row, a closed form, a verdict) and its checks.
struct ReportRecord {
    std::string name;
    std::vector<Check> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    ReportRecord& add(std::string check, bool pass, std::string detail = {})
    {
        checks.push_back({std::move(check), pass, std::move(detail)});
        return *this;
    }

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

struct Report {
    std::string title;
    std::vector<ReportRecord> records;

    bool passed() const
    {
        return std::all_of(records.begin(), records.end(),
                           [](const ReportRecord& r) { return r.passed(); });
    }

    void append(const Report& other)
    {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }

    friend bool operator==(const Report&, const Report&) = default;
};

inline void to_json(nlohmann::json& j, const Check& c)
{
    j = {{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

inline void from_json(const nlohmann::json& j, Check& c)
{
    j.at("check").get_to(c.name);
    j.at("pass").get_to(c.pass);
    c.detail = j.value("detail", std::string{});
}

inline void to_json(nlohmann::json& j, const ReportRecord& r)
{
    j = {{"name", r.name}, {"checks", r.checks}, {"pass", r.passed()}};
}

inline void from_json(const nlohmann::json& j, ReportRecord& r)
{
    j.at("name").get_to(r.name);
    j.at("checks").get_to(r.checks);
}

inline void to_json(nlohmann::json& j, const Report& r)
{
    j = {{"report", r.title}, {"records", r.records}, {"pass", r.passed()}};
}

inline void from_json(const nlohmann::json& j, Report& r)
{
    j.at("report").get_to(r.title);
    j.at("records").get_to(r.records);
}

/// Fixed-width text rendering: one line per check, grouped by record.
inline std::string render_table(const Report& report)
{
    std::size_t width = 4;
    for (const auto& rec : report.records)
        width = std::max(width, rec.name.size());

    std::ostringstream out;
    out << report.title << '\n';
    for (const auto& rec : report.records) {
        bool first = true;
        for (const auto& c : rec.checks) {
            std::string name = first ? rec.name : std::string{};
            name.resize(width, ' ');
            out << "  " << name << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty())
                out << ": " << c.detail;
            out << '\n';
            first = false;
        }
        if (rec.checks.empty())
            out << "  " << rec.name << '\n';
    }
    out << (report.passed() ? "all checks passed" : "FAILED") << '\n';
    return out.str();
}

}  // namespace biquot
