#include "qopamp/config_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

namespace qopamp {

namespace {

constexpr std::string_view kWhitespace = " \t\r\v\f";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(kWhitespace);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(kWhitespace);
    return s.substr(first, last - first + 1);
}

std::string shortest(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

struct Entry {
    std::string value;
    std::size_t line;
};

using Section = std::map<std::string, Entry, std::less<>>;

const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& schema() {
    static const std::map<std::string, std::set<std::string, std::less<>>, std::less<>> keys = {
        {"device", {"R_l", "R_r", "R_f", "R_0", "reactance_kind", "reactance_value"}},
        {"temperatures", {"T_l", "T_r", "T_f", "T_a", "T_b"}},
        {"sweep", {"omega_min", "omega_max", "points", "spacing"}},
        {"run", {"units", "tolerance"}},
    };
    return keys;
}

class Reader {
  public:
    explicit Reader(std::map<std::string, Section, std::less<>> sections) : sections_(std::move(sections)) {}

    const Entry* find(std::string_view section, std::string_view key) const {
        const auto s = sections_.find(section);
        if (s == sections_.end()) return nullptr;
        const auto e = s->second.find(key);
        return e == s->second.end() ? nullptr : &e->second;
    }

    std::optional<double> number(std::string_view section, std::string_view key) const {
        const Entry* e = find(section, key);
        if (!e) return std::nullopt;
        std::string_view text = e->value;
        if (!text.empty() && text.front() == '+') text.remove_prefix(1);
        double value = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
            throw ConfigError(e->line, "malformed number '" + e->value + "' for key " + std::string(key) +
                                           " at line " + std::to_string(e->line));
        }
        if (!std::isfinite(value)) {
            throw ConfigError(e->line, std::string(key) + " must be finite at line " + std::to_string(e->line));
        }
        return value;
    }

    double required(std::string_view section, std::string_view key) const {
        auto v = number(section, key);
        if (!v) throw ConfigError(0, "missing required key " + std::string(key) + " in [" + std::string(section) + "]");
        return *v;
    }

    std::size_t line_of(std::string_view section, std::string_view key) const {
        const Entry* e = find(section, key);
        return e ? e->line : 0;
    }

  private:
    std::map<std::string, Section, std::less<>> sections_;
};

ReactanceKind parse_kind(const Entry& e) {
    if (e.value == "none") return ReactanceKind::none;
    if (e.value == "constant") return ReactanceKind::constant_X;
    if (e.value == "inductive") return ReactanceKind::inductive;
    if (e.value == "capacitive") return ReactanceKind::capacitive;
    throw ConfigError(e.line, "unknown reactance_kind '" + e.value + "' at line " + std::to_string(e.line));
}

std::string_view kind_name(ReactanceKind kind) {
    switch (kind) {
    case ReactanceKind::none: return "none";
    case ReactanceKind::constant_X: return "constant";
    case ReactanceKind::inductive: return "inductive";
    case ReactanceKind::capacitive: return "capacitive";
    }
    return "none";
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message) : std::runtime_error(message), line_(line) {}

RunConfig parse_config(std::string_view text) {
    std::map<std::string, Section, std::less<>> sections;
    Section* current = nullptr;
    std::string current_name;

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string at = " at line " + std::to_string(line_no);

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(line_no, "unterminated section header" + at);
            const std::string name(trim(line.substr(1, line.size() - 2)));
            if (!schema().contains(name)) throw ConfigError(line_no, "unknown section " + name + at);
            current = &sections[name];
            current_name = name;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'" + at);
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ConfigError(line_no, "missing key" + at);
        if (!current) throw ConfigError(line_no, "key " + key + " outside of any section" + at);
        if (!schema().at(current_name).contains(key)) throw ConfigError(line_no, "unknown key " + key + at);
        if (current->contains(key)) throw ConfigError(line_no, "duplicate key " + key + at);
        current->emplace(key, Entry{value, line_no});
    }

    const Reader in(std::move(sections));
    RunConfig cfg;

    if (const Entry* e = in.find("run", "units")) {
        if (e->value == "SI") {
            cfg.units = UnitSystem::SI;
        } else if (e->value == "normalized") {
            cfg.units = UnitSystem::normalized;
        } else {
            throw ConfigError(e->line, "unknown units '" + e->value + "' at line " + std::to_string(e->line));
        }
    }
    cfg.tolerance = in.number("run", "tolerance").value_or(cfg.tolerance);
    if (!(cfg.tolerance > 0.0)) {
        throw ConfigError(in.line_of("run", "tolerance"), "tolerance must be positive");
    }

    DeviceParams& p = cfg.params;
    p.constants = PhysicalConstants::for_units(cfg.units);
    const auto resistance = [&](const char* key) {
        const double r = in.required("device", key);
        if (!(r > 0.0)) throw ConfigError(in.line_of("device", key), std::string(key) + " must be positive");
        return r;
    };
    p.R_l = resistance("R_l");
    p.R_r = resistance("R_r");
    p.R_f = resistance("R_f");
    p.R_0 = resistance("R_0");
    if (const Entry* e = in.find("device", "reactance_kind")) p.reactance.kind = parse_kind(*e);
    p.reactance.value = in.number("device", "reactance_value").value_or(0.0);
    if ((p.reactance.kind == ReactanceKind::inductive || p.reactance.kind == ReactanceKind::capacitive) &&
        !(p.reactance.value > 0.0)) {
        throw ConfigError(in.line_of("device", "reactance_value"),
                          "reactance_value must be positive for " + std::string(kind_name(p.reactance.kind)));
    }

    for (PortId port : kAllPorts) {
        const std::string key = "T_" + std::string(port_name(port));
        const double t = in.number("temperatures", key).value_or(0.0);
        if (t < 0.0) throw ConfigError(in.line_of("temperatures", key), key + " must be >= 0");
        p.env.set(port, t);
    }

    SweepSpec& sw = cfg.sweep;
    sw.omega_min = in.number("sweep", "omega_min").value_or(sw.omega_min);
    sw.omega_max = in.number("sweep", "omega_max").value_or(sw.omega_max);
    if (const Entry* e = in.find("sweep", "points")) {
        int points = 0;
        const auto res = std::from_chars(e->value.data(), e->value.data() + e->value.size(), points);
        if (e->value.empty() || res.ec != std::errc() || res.ptr != e->value.data() + e->value.size()) {
            throw ConfigError(e->line, "malformed integer '" + e->value + "' for key points at line " +
                                           std::to_string(e->line));
        }
        sw.points = points;
    }
    if (const Entry* e = in.find("sweep", "spacing")) {
        if (e->value == "linear") {
            sw.spacing = Spacing::linear;
        } else if (e->value == "logarithmic") {
            sw.spacing = Spacing::logarithmic;
        } else {
            throw ConfigError(e->line, "unknown spacing '" + e->value + "' at line " + std::to_string(e->line));
        }
    }
    try {
        sw.validate();
        p.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError(0, err.what());
    }
    return cfg;
}

std::string render_config(const RunConfig& config) {
    const DeviceParams& p = config.params;
    std::string out;
    const auto kv = [&out](std::string_view key, std::string_view value) {
        out.append(key).append(" = ").append(value).push_back('\n');
    };

    out += "[device]\n";
    kv("R_l", shortest(p.R_l));
    kv("R_r", shortest(p.R_r));
    kv("R_f", shortest(p.R_f));
    kv("R_0", shortest(p.R_0));
    kv("reactance_kind", kind_name(p.reactance.kind));
    kv("reactance_value", shortest(p.reactance.value));

    out += "\n[temperatures]\n";
    for (PortId port : kAllPorts) kv("T_" + std::string(port_name(port)), shortest(p.env.temperature(port)));

    out += "\n[sweep]\n";
    kv("omega_min", shortest(config.sweep.omega_min));
    kv("omega_max", shortest(config.sweep.omega_max));
    kv("points", std::to_string(config.sweep.points));
    kv("spacing", config.sweep.spacing == Spacing::linear ? "linear" : "logarithmic");

    out += "\n[run]\n";
    kv("units", config.units == UnitSystem::SI ? "SI" : "normalized");
    kv("tolerance", shortest(config.tolerance));
    return out;
}

std::string write_csv(const std::vector<NoiseReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("cannot write CSV for an empty report list");
    std::string out(kCsvHeader);
    out.push_back('\n');
    std::array<char, 32> buf{};
    const auto field = [&](double v, char sep) {
        const int n = std::snprintf(buf.data(), buf.size(), "%.17g", v);
        out.append(buf.data(), static_cast<std::size_t>(n)).push_back(sep);
    };
    for (const NoiseReport& r : reports) {
        field(r.omega, ',');
        field(r.sigma_total, ',');
        field(r.term_r, ',');
        field(r.term_f, ',');
        field(r.term_a, ',');
        field(r.term_b, ',');
        field(r.xi, ',');
        field(r.noise_figure_db, ',');
        field(r.back_action, '\n');
    }
    return out;
}

}  // namespace qopamp
