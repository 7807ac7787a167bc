#include "cli/envelope.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"

namespace thermoinfo::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Value& v) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(x)) return format_number(x);
                return x;
            } else {
                return x;
            }
        },
        v);
}

std::string to_text(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::nullptr_t>) {
                return "n/a";
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                return format_number(x);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return x;
            } else {
                return std::to_string(x);
            }
        },
        v);
}

std::string csv_cell(const Value& v) {
    std::string s = to_text(v);
    if (std::holds_alternative<std::nullptr_t>(v)) return "";
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    return s;
}

json record_values(const Record& r) {
    json obj = json::object();
    for (const auto& f : r) obj[f.name] = to_json(f.value);
    return obj;
}

json record_units(const Record& r) {
    json obj = json::object();
    for (const auto& f : r) {
        if (!f.unit.empty()) obj[f.name] = f.unit;
    }
    return obj;
}

void render_json(const Envelope& env, std::ostream& out) {
    json doc;
    doc["command"] = env.command;
    doc["inputs"] = record_values(env.inputs);
    doc["input_units"] = record_units(env.inputs);
    doc["results"] = record_values(env.results);
    doc["result_units"] = record_units(env.results);
    if (!env.rows.empty()) {
        json rows = json::array();
        for (const auto& r : env.rows) rows.push_back(record_values(r));
        doc["rows"] = std::move(rows);
        doc["row_units"] = record_units(env.rows.front());
    }
    doc["warnings"] = env.warnings;
    doc["notes"] = env.notes;
    out << doc.dump(2) << '\n';
}

void render_csv_rows(const std::vector<Record>& rows, std::ostream& out) {
    const Record& head = rows.front();
    for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i].name;
    out << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_cell(r[i].value);
        out << '\n';
    }
}

void render_text(const Envelope& env, std::ostream& out) {
    auto section = [&out](const char* title, const Record& r) {
        if (r.empty()) return;
        out << title << ":\n";
        for (const auto& f : r) {
            out << "  " << f.name << " = " << to_text(f.value);
            if (!f.unit.empty() && f.unit != "1") out << ' ' << f.unit;
            out << '\n';
        }
    };
    out << env.command << '\n';
    section("inputs", env.inputs);
    section("results", env.results);
    if (!env.rows.empty()) {
        out << "rows:\n";
        render_csv_rows(env.rows, out);
    }
    for (const auto& n : env.notes) out << "note: " << n << '\n';
    for (const auto& w : env.warnings) out << "warning: " << w << '\n';
}

} // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const double mag = std::abs(x);
    const bool sci = mag != 0.0 && (mag >= 1e16 || mag < 1e-5);
    const auto res = sci ? std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific)
                         : std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void render(const Envelope& env, Format format, std::ostream& out) {
    switch (format) {
        case Format::json:
            render_json(env, out);
            return;
        case Format::csv:
            if (!env.rows.empty()) {
                render_csv_rows(env.rows, out);
            } else {
                render_csv_rows({env.results}, out);
            }
            return;
        case Format::text:
            render_text(env, out);
            return;
    }
}

} // namespace thermoinfo::cli
