#include "dlsched/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace dlsched {
namespace {

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, std::string_view field, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line;
    if (!field.empty())
        msg << ", field '" << field << "'";
    msg << ": " << what;
    throw Error(ErrorKind::ParseError, msg.str());
}

double parse_double(std::string_view text, std::size_t line, std::string_view field) {
    text = trim(text);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        parse_fail(line, field, "expected a number, got '" + std::string(text) + "'");
    return value;
}

std::size_t parse_count(std::string_view text, std::size_t line, std::string_view field) {
    text = trim(text);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        parse_fail(line, field, "expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

// Collects key/value pairs with their source line and turns them into an
// Instance once all pairs are seen.
class FieldCollector {
public:
    void add(std::string_view key, std::string_view value, std::size_t line) {
        static constexpr std::string_view known[] = {"n", "a0", "alpha", "t0", "b"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            parse_fail(line, key, "unknown field");
        if (fields_.contains(std::string(key)))
            parse_fail(line, key, "duplicate field");
        fields_.emplace(std::string(key), Entry{std::string(value), line});
    }

    Instance build(std::size_t fallback_line) const {
        RawInstance raw;
        raw.n = parse_count(get("n", fallback_line).text, get("n", fallback_line).line, "n");
        raw.a0 = number("a0", fallback_line);
        raw.alpha = number("alpha", fallback_line);
        raw.t0 = number("t0", fallback_line);

        const Entry& rates = get("b", fallback_line);
        std::string_view rest = rates.text;
        while (!rest.empty()) {
            const auto cut = rest.find_first_of(", \t");
            const std::string_view token = rest.substr(0, cut);
            if (!token.empty())
                raw.b.push_back(parse_double(token, rates.line, "b"));
            if (cut == std::string_view::npos)
                break;
            rest.remove_prefix(cut + 1);
        }
        return validate_instance(raw);
    }

private:
    struct Entry {
        std::string text;
        std::size_t line;
    };

    const Entry& get(const std::string& key, std::size_t fallback_line) const {
        const auto it = fields_.find(key);
        if (it == fields_.end())
            parse_fail(fallback_line, key, "missing field");
        return it->second;
    }

    double number(const std::string& key, std::size_t fallback_line) const {
        const Entry& entry = get(key, fallback_line);
        return parse_double(entry.text, entry.line, key);
    }

    std::map<std::string, Entry, std::less<>> fields_;
};

std::string join_rates(std::span<const double> rates, std::string_view separator) {
    std::string out;
    for (std::size_t j = 0; j < rates.size(); ++j) {
        if (j > 0)
            out += separator;
        out += format_number(rates[j]);
    }
    return out;
}

void check_range(const Range& range, std::string_view name, double min_low, double max_high) {
    std::ostringstream msg;
    msg << name << " (" << range.low << ", " << range.high << ")";
    if (!std::isfinite(range.low) || !std::isfinite(range.high) || !(range.low < range.high))
        throw Error(ErrorKind::BadRange, msg.str() + " must be finite with low < high");
    if (range.low < min_low || range.high > max_high)
        throw Error(ErrorKind::BadRange, msg.str() + " leaves the admissible parameter domain");
    if (std::nextafter(range.low, range.high) >= range.high)
        throw Error(ErrorKind::BadRange, msg.str() + " contains no representable interior value");
}

} // namespace

double unit_open(std::mt19937_64& engine) {
    constexpr double kScale = 0x1.0p-53;
    return (static_cast<double>(engine() >> 11) + 0.5) * kScale;
}

double sample_open(std::mt19937_64& engine, const Range& range) {
    for (;;) {
        const double value = range.low + (range.high - range.low) * unit_open(engine);
        if (value > range.low && value < range.high)
            return value;
    }
}

void validate_gen_spec(const GenSpec& spec) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    check_range(spec.b_range, "b range", 0.0, kInf);
    check_range(spec.a0_range, "a0 range", 0.0, kInf);
    check_range(spec.t0_range, "t0 range", 0.0, kInf);
    check_range(spec.alpha_range, "alpha range", 0.0, 1.0);
    if (spec.alpha_range.high <= kMinAlpha)
        throw Error(ErrorKind::BadRange, "alpha range must extend above " + format_number(kMinAlpha));
}

Instance generate_instance(const GenSpec& spec, std::size_t n) {
    validate_gen_spec(spec);
    if (n == 0)
        throw Error(ErrorKind::EmptyJobs, "n must be >= 1");

    std::mt19937_64 engine(spec.seed);
    RawInstance raw;
    raw.n = n;
    raw.a0 = sample_open(engine, spec.a0_range);
    raw.t0 = sample_open(engine, spec.t0_range);
    do {
        raw.alpha = sample_open(engine, spec.alpha_range);
    } while (raw.alpha <= kMinAlpha);
    raw.b.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        raw.b.push_back(sample_open(engine, spec.b_range));
    return validate_instance(raw);
}

std::uint64_t derive_seed(std::uint64_t base, std::size_t n, std::size_t replication) {
    auto splitmix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return splitmix(splitmix(splitmix(base) ^ static_cast<std::uint64_t>(n)) ^ static_cast<std::uint64_t>(replication));
}

const std::vector<RateFixture>& reference_rate_vectors() {
    static const std::vector<RateFixture> fixtures = {
        {2, {4.82, 2.98}},
        {3, {5.58, 4.10, 1.90}},
        {4, {0.59, 1.02, 2.42, 0.31}},
        {5, {0.59, 0.47, 1.69, 3.69, 3.63}},
        {6, {0.40, 3.81, 4.71, 2.96, 0.53, 1.32}},
        {7, {5.15, 3.28, 5.44, 1.52, 4.45, 1.87, 4.51}},
        {8, {4.69, 0.06, 3.25, 2.22, 5.66, 0.84, 2.34, 2.78}},
        {9, {0.46, 2.77, 3.32, 1.78, 4.47, 1.03, 5.17, 1.72, 4.47}},
        {10, {3.18, 5.28, 1.09, 4.57, 1.68, 0.54, 3.42, 2.64, 2.64, 3.67}},
    };
    return fixtures;
}

Instance fixture_instance(std::size_t n, double a0, double alpha, double t0) {
    for (const auto& fixture : reference_rate_vectors())
        if (fixture.n == n)
            return validate_instance(RawInstance{n, a0, alpha, t0, fixture.b});
    throw Error(ErrorKind::IndexOutOfRange, "no rate fixture for n = " + std::to_string(n) + " (available: 2..10)");
}

std::string format_number(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void write_instance(const Instance& instance, std::ostream& sink) {
    sink << "# dlsched instance v" << kGeneratorVersion << '\n'
         << "n = " << instance.n() << '\n'
         << "a0 = " << format_number(instance.a0()) << '\n'
         << "alpha = " << format_number(instance.alpha()) << '\n'
         << "t0 = " << format_number(instance.t0()) << '\n'
         << "b = " << join_rates(instance.rates(), ", ") << '\n';
}

Instance read_instance(std::istream& source) {
    FieldCollector fields;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(source, line)) {
        ++line_number;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            parse_fail(line_number, {}, "expected 'key = value'");
        fields.add(trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line_number);
    }
    return fields.build(line_number + 1);
}

std::string format_record(const Instance& instance) {
    return "n=" + std::to_string(instance.n()) + " a0=" + format_number(instance.a0()) +
           " alpha=" + format_number(instance.alpha()) + " t0=" + format_number(instance.t0()) +
           " b=" + join_rates(instance.rates(), ",");
}

Instance parse_record(std::string_view line, std::size_t line_number) {
    FieldCollector fields;
    std::string_view rest = trim(line);
    while (!rest.empty()) {
        const auto cut = rest.find_first_of(" \t");
        const std::string_view token = rest.substr(0, cut);
        const auto eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0)
            parse_fail(line_number, {}, "expected 'key=value', got '" + std::string(token) + "'");
        fields.add(token.substr(0, eq), token.substr(eq + 1), line_number);
        if (cut == std::string_view::npos)
            break;
        rest = trim(rest.substr(cut));
    }
    return fields.build(line_number);
}

void write_batch(std::span<const Instance> instances, std::span<const std::string> header, std::ostream& sink) {
    for (const auto& line : header)
        sink << "# " << line << '\n';
    for (const auto& instance : instances)
        sink << format_record(instance) << '\n';
}

std::vector<Instance> read_batch(std::istream& source) {
    std::vector<Instance> out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(source, line)) {
        ++line_number;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        out.push_back(parse_record(text, line_number));
    }
    return out;
}

std::vector<std::string> provenance_header(const GenSpec& spec) {
    auto range = [](const Range& r) { return "(" + format_number(r.low) + "," + format_number(r.high) + ")"; };
    return {
        "dlsched generator v" + std::to_string(kGeneratorVersion),
        "prng=" + std::string(kPrngName) + " mapping=" + std::string(kPrngMapping) +
            " seed=" + std::to_string(spec.seed),
        "b_range=" + range(spec.b_range) + " a0_range=" + range(spec.a0_range) + " t0_range=" +
            range(spec.t0_range) + " alpha_range=" + range(spec.alpha_range),
    };
}

} // namespace dlsched
