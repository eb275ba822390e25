#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pmikit/csv.hpp"
#include "pmikit/dates.hpp"
#include "pmikit/errors.hpp"

namespace pmikit {

// One day of station data: average dry-bulb temperature and, when recorded,
// average relative humidity.
struct DailyObservation {
    Date date{};
    double avg_temp_c = 0.0;
    std::optional<double> avg_rh_pct;

    void validate() const {
        if (!std::isfinite(avg_temp_c) || avg_temp_c < -90.0 || avg_temp_c > 60.0) {
            throw DomainError(format_date(date) + ": avg_temp_c must be finite in [-90,60]");
        }
        if (avg_rh_pct &&
            (!std::isfinite(*avg_rh_pct) || *avg_rh_pct < 0.0 || *avg_rh_pct > 100.0)) {
            throw DomainError(format_date(date) + ": avg_rh_pct must be in [0,100]");
        }
    }
};

enum class WeatherField { Temperature, Humidity };

// Date-sorted daily observations from one station. Duplicate dates are
// rejected at construction; lookups are binary searches.
class WeatherSeries {
public:
    WeatherSeries() = default;

    static WeatherSeries from_observations(std::vector<DailyObservation> obs,
                                           std::string station_id = "") {
        std::sort(obs.begin(), obs.end(), [](const DailyObservation& a,
                                             const DailyObservation& b) { return a.date < b.date; });
        for (std::size_t i = 0; i < obs.size(); ++i) {
            obs[i].validate();
            if (i > 0 && obs[i].date == obs[i - 1].date) {
                throw ParseError("duplicate weather date " + format_date(obs[i].date));
            }
        }
        WeatherSeries series;
        series.obs_ = std::move(obs);
        series.station_id_ = std::move(station_id);
        return series;
    }

    const std::string& station_id() const { return station_id_; }
    std::size_t size() const { return obs_.size(); }
    bool empty() const { return obs_.empty(); }
    const std::vector<DailyObservation>& observations() const { return obs_; }
    Date first_date() const { return obs_.front().date; }
    Date last_date() const { return obs_.back().date; }

    const DailyObservation* find(Date date) const {
        auto it = std::lower_bound(
            obs_.begin(), obs_.end(), date,
            [](const DailyObservation& o, Date d) { return o.date < d; });
        if (it == obs_.end() || it->date != date) return nullptr;
        return &*it;
    }

    // Dates in [from, to] with no observation.
    std::vector<Date> missing_dates(Date from, Date to) const {
        std::vector<Date> missing;
        for (Date d = from; d <= to; d += std::chrono::days{1}) {
            if (find(d) == nullptr) missing.push_back(d);
        }
        return missing;
    }

    bool covers(Date from, Date to) const { return missing_dates(from, to).empty(); }

private:
    std::vector<DailyObservation> obs_;
    std::string station_id_;
};

// Result of gap filling: the completed series plus the dates that were
// synthesized, for output metadata.
struct GapFillResult {
    WeatherSeries series;
    std::vector<Date> filled_dates;
};

// Linearly interpolates interior gaps of at most max_gap_days between
// neighboring observations. Longer gaps and gaps at either end are left
// untouched; downstream coverage checks still fail on them. Never applied
// implicitly: silently skipping days would bias ADD downward.
inline GapFillResult fill_gaps(const WeatherSeries& series, int max_gap_days = 2) {
    if (max_gap_days < 1) throw DomainError("fill_gaps: max_gap_days must be >= 1");
    const auto& obs = series.observations();
    std::vector<DailyObservation> filled;
    std::vector<Date> added;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        filled.push_back(obs[i]);
        if (i + 1 == obs.size()) break;
        long gap = days_between(obs[i].date, obs[i + 1].date) - 1;
        if (gap < 1 || gap > max_gap_days) continue;
        const auto& a = obs[i];
        const auto& b = obs[i + 1];
        for (long step = 1; step <= gap; ++step) {
            double frac = double(step) / double(gap + 1);
            DailyObservation o;
            o.date = a.date + std::chrono::days{step};
            o.avg_temp_c = a.avg_temp_c + frac * (b.avg_temp_c - a.avg_temp_c);
            if (a.avg_rh_pct && b.avg_rh_pct) {
                o.avg_rh_pct = *a.avg_rh_pct + frac * (*b.avg_rh_pct - *a.avg_rh_pct);
            }
            added.push_back(o.date);
            filled.push_back(o);
        }
    }
    return GapFillResult{WeatherSeries::from_observations(std::move(filled), series.station_id()),
                         std::move(added)};
}

namespace detail {

inline double parse_double_field(const std::string& text, std::size_t line, const char* name) {
    char* end = nullptr;
    double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || (end && *end != '\0')) {
        throw ParseError("line " + std::to_string(line) + ": cannot parse " + name + " '" +
                         text + "'");
    }
    return value;
}

}  // namespace detail

// CSV contract: header "date,avg_temp_c,avg_rh_pct", ISO-8601 dates, empty
// humidity cell allowed. Rows may arrive out of order; the series is sorted.
inline WeatherSeries load_weather_csv(std::istream& in, std::string station_id = "") {
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next(fields)) throw ParseError("weather CSV is empty (header row required)");
    if (fields.size() != 3 || fields[0] != "date" || fields[1] != "avg_temp_c" ||
        fields[2] != "avg_rh_pct") {
        throw ParseError("weather CSV header must be 'date,avg_temp_c,avg_rh_pct'");
    }
    std::vector<DailyObservation> obs;
    while (reader.next(fields)) {
        std::size_t line = reader.line_number();
        if (fields.size() != 3) {
            throw ParseError("line " + std::to_string(line) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        }
        DailyObservation o;
        try {
            o.date = parse_date(fields[0]);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line) + ": " + e.what());
        }
        o.avg_temp_c = detail::parse_double_field(fields[1], line, "avg_temp_c");
        if (!fields[2].empty()) {
            o.avg_rh_pct = detail::parse_double_field(fields[2], line, "avg_rh_pct");
        }
        try {
            o.validate();
        } catch (const DomainError& e) {
            throw ParseError("line " + std::to_string(line) + ": " + e.what());
        }
        obs.push_back(o);
    }
    return WeatherSeries::from_observations(std::move(obs), std::move(station_id));
}

inline void write_weather_csv(std::ostream& out, const WeatherSeries& series) {
    out << "date,avg_temp_c,avg_rh_pct\n";
    char buf[64];
    for (const auto& o : series.observations()) {
        out << format_date(o.date) << ',';
        std::snprintf(buf, sizeof(buf), "%.6g", o.avg_temp_c);
        out << buf << ',';
        if (o.avg_rh_pct) {
            std::snprintf(buf, sizeof(buf), "%.6g", *o.avg_rh_pct);
            out << buf;
        }
        out << '\n';
    }
}

namespace detail {

inline void require_coverage(const WeatherSeries& series, Date from, Date to,
                             const std::string& what) {
    auto missing = series.missing_dates(from, to);
    if (missing.empty()) return;
    std::string msg = what + ": weather series is missing " +
                      std::to_string(missing.size()) + " date(s):";
    std::vector<std::string> names;
    for (std::size_t i = 0; i < missing.size(); ++i) {
        names.push_back(format_date(missing[i]));
        if (i < 8) msg += " " + names.back();
    }
    if (missing.size() > 8) msg += " ...";
    throw GapError(msg, std::move(names));
}

}  // namespace detail

// Accumulated degree days over [death, discovery], both endpoints included.
// A day contributes max(avg_temp_c - base, 0): days at or below the base add
// nothing, and at the default base of 0 a warm day contributes its full
// average temperature.
inline double compute_add(const WeatherSeries& series, Date death, Date discovery,
                          double base_temp_c = 0.0) {
    if (discovery < death) {
        throw DomainError("compute_add: discovery " + format_date(discovery) +
                          " precedes death " + format_date(death));
    }
    detail::require_coverage(series, death, discovery, "compute_add");
    double total = 0.0;
    for (Date d = death; d <= discovery; d += std::chrono::days{1}) {
        double excess = series.find(d)->avg_temp_c - base_temp_c;
        if (excess > 0.0) total += excess;
    }
    return total;
}

// Mean of one field over the window_days calendar days ending on and
// including `end`. The default 14-day window yields the temp_hist and
// hum_hist discovery-history features.
inline double trailing_mean(const WeatherSeries& series, Date end, int window_days = 14,
                            WeatherField field = WeatherField::Temperature) {
    if (window_days < 1) throw DomainError("trailing_mean: window_days must be >= 1");
    Date start = end - std::chrono::days{window_days - 1};
    detail::require_coverage(series, start, end, "trailing_mean");
    double sum = 0.0;
    for (Date d = start; d <= end; d += std::chrono::days{1}) {
        const DailyObservation* o = series.find(d);
        if (field == WeatherField::Temperature) {
            sum += o->avg_temp_c;
        } else {
            if (!o->avg_rh_pct) {
                throw MissingFieldError("trailing_mean: no humidity recorded on " +
                                        format_date(d));
            }
            sum += *o->avg_rh_pct;
        }
    }
    return sum / double(window_days);
}

}  // namespace pmikit
