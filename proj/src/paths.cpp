#include "tqsim/paths.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace tqsim {

namespace {

void check_increasing(const std::vector<double>& times) {
    double prev = 0.0;
    for (double t : times) {
        if (!(t > prev)) throw std::invalid_argument("StepPath: times must be strictly increasing and positive");
        prev = t;
    }
}

}  // namespace

StepPath StepPath::make(double initial_value, std::vector<double> times,
                        std::vector<double> values) {
    if (times.size() != values.size())
        throw std::invalid_argument("StepPath: times/values size mismatch");
    // An event at t = 0 just replaces the initial value.
    if (!times.empty() && times.front() == 0.0) {
        initial_value = values.front();
        times.erase(times.begin());
        values.erase(values.begin());
    }
    check_increasing(times);
    StepPath p;
    p.initial_value = initial_value;
    p.times = std::move(times);
    p.values = std::move(values);
    return p;
}

void StepPath::append(double t, double v) {
    if (times.empty()) {
        if (t == 0.0) {
            initial_value = v;
            return;
        }
        if (!(t > 0.0)) throw std::invalid_argument("StepPath: event time must be positive");
    } else if (!(t > times.back())) {
        throw std::invalid_argument("StepPath: event times must be strictly increasing");
    }
    times.push_back(t);
    values.push_back(v);
}

double StepPath::value_at(double t) const {
    auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return initial_value;
    return values[static_cast<std::size_t>(it - times.begin()) - 1];
}

StepPath StepPath::truncated(double t_max) const {
    StepPath out;
    out.initial_value = initial_value;
    auto it = std::upper_bound(times.begin(), times.end(), t_max);
    const auto n = static_cast<std::size_t>(it - times.begin());
    out.times.assign(times.begin(), times.begin() + n);
    out.values.assign(values.begin(), values.begin() + n);
    return out;
}

GridPath GridPath::make(double dt, std::vector<double> values) {
    if (!(dt > 0.0)) throw std::invalid_argument("GridPath: dt must be positive");
    if (values.empty()) throw std::invalid_argument("GridPath: needs at least the t = 0 value");
    GridPath p;
    p.dt = dt;
    p.values = std::move(values);
    return p;
}

GridPath GridPath::zeros(double horizon, std::size_t intervals) {
    if (!(horizon > 0.0) || intervals == 0)
        throw std::invalid_argument("GridPath: horizon and interval count must be positive");
    GridPath p;
    p.dt = horizon / static_cast<double>(intervals);
    p.values.assign(intervals + 1, 0.0);
    return p;
}

GridPath GridPath::truncated(double t_max) const {
    const auto last = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
    GridPath out;
    out.dt = dt;
    out.values.assign(values.begin(),
                      values.begin() + static_cast<std::ptrdiff_t>(std::min(last + 1, values.size())));
    return out;
}

StepPath regulator(const StepPath& f) {
    StepPath psi;
    double running_min = std::min(0.0, f.initial_value);
    psi.initial_value = -running_min;
    psi.times = f.times;
    psi.values.resize(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        running_min = std::min(running_min, std::min(0.0, f.values[i]));
        psi.values[i] = -running_min;
    }
    return psi;
}

GridPath regulator(const GridPath& f) {
    GridPath psi;
    psi.dt = f.dt;
    psi.values.resize(f.values.size());
    double running_min = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        running_min = std::min(running_min, std::min(0.0, f.values[i]));
        psi.values[i] = -running_min;
    }
    return psi;
}

StepPath reflect(const StepPath& f) {
    StepPath out = regulator(f);
    out.initial_value += f.initial_value;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += f.values[i];
    return out;
}

GridPath reflect(const GridPath& f) {
    GridPath out = regulator(f);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += f.values[i];
    return out;
}

std::optional<double> hitting_time(const StepPath& f, double level) {
    if (f.initial_value <= level) return 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (f.values[i] <= level) return f.times[i];
    return std::nullopt;
}

std::optional<double> hitting_time(const GridPath& f, double level) {
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (f.values[i] <= level) return f.time_at(i);
    return std::nullopt;
}

namespace {

// Shared sweep over (time, reflected value) samples. `horizon` closes a
// trailing excursion.
template <typename TimeAt>
std::vector<Excursion> sweep_excursions(const std::vector<double>& refl, TimeAt time_at,
                                        double horizon) {
    std::vector<Excursion> out;
    bool open = false;
    Excursion cur;
    for (std::size_t i = 0; i < refl.size(); ++i) {
        const double v = refl[i];
        if (v > 0.0) {
            if (!open) {
                open = true;
                cur.start = time_at(i);
                cur.height = v;
            } else {
                cur.height = std::max(cur.height, v);
            }
        } else if (open) {
            cur.end = time_at(i);
            out.push_back(cur);
            open = false;
        }
    }
    if (open) {
        cur.end = horizon;
        out.push_back(cur);
    }
    return out;
}

}  // namespace

std::vector<Excursion> excursions_above_running_min(const StepPath& f, double horizon) {
    const StepPath r = reflect(f);
    std::vector<double> samples;
    samples.reserve(r.values.size() + 1);
    samples.push_back(r.initial_value);
    std::vector<double> sample_times;
    sample_times.reserve(r.values.size() + 1);
    sample_times.push_back(0.0);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (r.times[i] > horizon) break;
        samples.push_back(r.values[i]);
        sample_times.push_back(r.times[i]);
    }
    return sweep_excursions(samples, [&](std::size_t i) { return sample_times[i]; }, horizon);
}

std::vector<Excursion> excursions_above_running_min(const GridPath& f) {
    const GridPath r = reflect(f);
    return sweep_excursions(r.values, [&](std::size_t i) { return r.time_at(i); }, r.horizon());
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc()) throw std::invalid_argument("CSV: malformed number: " + std::string(s));
    return v;
}

// Reads `t,value` rows after a header line.
std::vector<std::pair<double, double>> read_rows(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,value", 0) != 0)
        throw std::invalid_argument("CSV: expected `t,value` header");
    std::vector<std::pair<double, double>> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("CSV: malformed row: " + line);
        rows.emplace_back(parse_double(std::string_view(line).substr(0, comma)),
                          parse_double(std::string_view(line).substr(comma + 1)));
    }
    return rows;
}

}  // namespace

void write_csv(const StepPath& p, std::ostream& os) {
    os << "t,value\n";
    os << "0," << format_double(p.initial_value) << '\n';
    for (std::size_t i = 0; i < p.times.size(); ++i)
        os << format_double(p.times[i]) << ',' << format_double(p.values[i]) << '\n';
}

void write_csv(const GridPath& p, std::ostream& os) {
    os << "t,value\n";
    for (std::size_t i = 0; i < p.values.size(); ++i)
        os << format_double(p.time_at(i)) << ',' << format_double(p.values[i]) << '\n';
}

StepPath read_step_csv(std::istream& is) {
    const auto rows = read_rows(is);
    if (rows.empty() || rows.front().first != 0.0)
        throw std::invalid_argument("CSV: step path must start with a t = 0 row");
    StepPath p;
    p.initial_value = rows.front().second;
    for (std::size_t i = 1; i < rows.size(); ++i) p.append(rows[i].first, rows[i].second);
    return p;
}

GridPath read_grid_csv(std::istream& is) {
    const auto rows = read_rows(is);
    if (rows.size() < 2) throw std::invalid_argument("CSV: grid path needs at least two rows");
    GridPath p;
    p.dt = rows[1].first;
    for (const auto& [t, v] : rows) p.values.push_back(v);
    if (!(p.dt > 0.0)) throw std::invalid_argument("CSV: grid step must be positive");
    return p;
}

std::string to_json(const StepPath& p) {
    nlohmann::json j{{"initial_value", p.initial_value}, {"times", p.times}, {"values", p.values}};
    return j.dump();
}

std::string to_json(const GridPath& p) {
    nlohmann::json j{{"dt", p.dt}, {"values", p.values}};
    return j.dump();
}

StepPath step_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    return StepPath::make(j.at("initial_value").get<double>(),
                          j.at("times").get<std::vector<double>>(),
                          j.at("values").get<std::vector<double>>());
}

GridPath grid_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    return GridPath::make(j.at("dt").get<double>(), j.at("values").get<std::vector<double>>());
}

}  // namespace tqsim
