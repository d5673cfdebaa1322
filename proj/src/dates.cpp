#include "tmotif/dates.hpp"

#include <charconv>
#include <chrono>
#include <stdexcept>

#include <fmt/format.h>

namespace tmotif {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

template <typename Int>
Int to_int(std::string_view s) {
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument(fmt::format("not an integer: '{}'", s));
    }
    return value;
}

}  // namespace

Day parse_iso_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !all_digits(text.substr(0, 4)) ||
        !all_digits(text.substr(5, 2)) || !all_digits(text.substr(8, 2))) {
        throw std::invalid_argument(fmt::format("malformed date '{}', expected YYYY-MM-DD", text));
    }
    using namespace std::chrono;
    const year_month_day ymd{year{to_int<int>(text.substr(0, 4))},
                             month{to_int<unsigned>(text.substr(5, 2))},
                             day{to_int<unsigned>(text.substr(8, 2))}};
    if (!ymd.ok()) {
        throw std::invalid_argument(fmt::format("invalid calendar date '{}'", text));
    }
    return sys_days{ymd}.time_since_epoch().count();
}

std::string format_iso_date(Day d) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{d}}};
    return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(ymd.year()),
                       static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
}

std::optional<Day> parse_duration(std::string_view text) {
    if (text == "inf" || text == "unbounded") return std::nullopt;
    if (text.empty()) throw std::invalid_argument("empty duration");

    std::string_view digits = text;
    char unit = 'd';
    const char last = text.back();
    if (last == 'y' || last == 'm' || last == 'd') {
        unit = last;
        digits.remove_suffix(1);
    }
    if (!all_digits(digits)) {
        throw std::invalid_argument(
            fmt::format("invalid duration '{}', expected <n>y, <n>m, <n>d, <n> or inf", text));
    }
    const auto n = to_int<Day>(digits);
    switch (unit) {
        case 'y': return n * kDaysPerYear;
        case 'm': return n * 30417 / 1000;
        default: return n;
    }
}

Day parse_finite_duration(std::string_view text) {
    auto d = parse_duration(text);
    if (!d) throw std::invalid_argument(fmt::format("duration '{}' must be finite", text));
    return *d;
}

}  // namespace tmotif
