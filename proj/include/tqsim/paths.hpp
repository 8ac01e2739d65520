#pragma once

// Cadlag path algebra shared by the prelimit and limit simulations.
//
// StepPath is a right-continuous piecewise-constant path: initial_value
// holds on [0, times[0]), and values[i] holds from times[i] (inclusive)
// onward. GridPath samples a path on the uniform grid k*dt, k = 0..K.
//
// Both kinds support the Skorokhod reflection pair: regulator() is the
// minimal non-decreasing process psi with f + psi >= 0 (the running
// infimum of the negative part, negated), and reflect() is f + psi.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tqsim {

struct StepPath {
    double initial_value = 0.0;
    std::vector<double> times;   // strictly increasing, all > 0
    std::vector<double> values;  // same length as times

    static StepPath make(double initial_value, std::vector<double> times,
                         std::vector<double> values);

    // Appends an event; t must exceed the last event time. t == 0 with
    // no events yet replaces the initial value instead.
    void append(double t, double v);

    double value_at(double t) const;  // right-continuous evaluation
    double last_value() const { return values.empty() ? initial_value : values.back(); }
    std::size_t size() const { return times.size(); }

    // Restriction to [0, t_max]: drops events after t_max.
    StepPath truncated(double t_max) const;
};

struct GridPath {
    double dt = 0.0;
    std::vector<double> values;  // values[k] at time k*dt

    static GridPath make(double dt, std::vector<double> values);
    // Uniform grid over [0, horizon] with `intervals` steps.
    static GridPath zeros(double horizon, std::size_t intervals);

    double horizon() const { return dt * static_cast<double>(values.size() - 1); }
    double time_at(std::size_t k) const { return dt * static_cast<double>(k); }
    std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }

    GridPath truncated(double t_max) const;
};

struct Excursion {
    double start = 0.0;
    double end = 0.0;
    double height = 0.0;  // maximum of the reflected path on [start, end)
};

// psi(f)(x) = -inf_{0<=y<=x} min(f(y), 0): non-negative, non-decreasing.
StepPath regulator(const StepPath& f);
GridPath regulator(const GridPath& f);

// phi(f) = f + psi(f) >= 0.
StepPath reflect(const StepPath& f);
GridPath reflect(const GridPath& f);

// First time f(t) <= level; nullopt if no event (resp. grid point)
// satisfies it. Grid results are reported at grid resolution and are
// never earlier than the true crossing when f decreases continuously
// between grid points.
std::optional<double> hitting_time(const StepPath& f, double level);
std::optional<double> hitting_time(const GridPath& f, double level);

// Maximal intervals on [0, horizon] where reflect(f) > 0. The last
// excursion is closed at the horizon if still running. For grid paths
// the horizon is intrinsic and endpoints land on grid times.
std::vector<Excursion> excursions_above_running_min(const StepPath& f, double horizon);
std::vector<Excursion> excursions_above_running_min(const GridPath& f);

// Serialization. CSV uses a `t,value` header with 17-significant-digit
// decimal fields, which round-trips doubles exactly; the first CSV row
// of a step path is (0, initial_value). JSON carries the raw structure.
void write_csv(const StepPath& p, std::ostream& os);
void write_csv(const GridPath& p, std::ostream& os);
StepPath read_step_csv(std::istream& is);
GridPath read_grid_csv(std::istream& is);

std::string to_json(const StepPath& p);
std::string to_json(const GridPath& p);
StepPath step_from_json(const std::string& text);
GridPath grid_from_json(const std::string& text);

// 17-significant-digit decimal formatting used in all CSV output.
std::string format_double(double v);

}  // namespace tqsim
