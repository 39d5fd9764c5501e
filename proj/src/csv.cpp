#include "pmeans/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "pmeans/errors.hpp"

namespace pmeans {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path.string(), 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct csv_field {
    std::string text;
    bool quoted = false;  // quoted fields are kept verbatim, unquoted ones get trimmed
};

// One logical CSV record. Quoted fields may span commas but not newlines;
// none of the supported formats need embedded line breaks.
std::vector<csv_field> split_record(std::string_view line, std::string_view origin,
                                    std::size_t line_no) {
    std::vector<csv_field> fields;
    csv_field current;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.text.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.text.push_back(c);
            }
        } else if (c == '"') {
            if (!trim(current.text).empty())
                throw parse_error(origin, line_no, "quote inside unquoted field");
            current.text.clear();
            current.quoted = true;
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current = {};
        } else {
            current.text.push_back(c);
        }
        ++i;
    }
    if (quoted) throw parse_error(origin, line_no, "unterminated quoted field");
    fields.push_back(std::move(current));
    return fields;
}

double parse_number(const csv_field& field, std::string_view origin, std::size_t line_no,
                    std::string_view what) {
    const std::string_view s = trim(field.text);
    if (s.empty())
        throw parse_error(origin, line_no, "empty " + std::string(what) + " field");
    double value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw parse_error(origin, line_no,
                          "cannot parse " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

struct record_reader {
    std::string_view text;
    std::string_view origin;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    // Next non-empty line split into fields, or false at end of input.
    bool next(std::vector<csv_field>& fields) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            pos = end + 1;
            ++line_no;
            if (trim(line).empty()) continue;
            fields = split_record(line, origin, line_no);
            return true;
        }
        return false;
    }
};

std::vector<std::string> header_names(const std::vector<csv_field>& fields) {
    std::vector<std::string> names;
    names.reserve(fields.size());
    for (const auto& f : fields) names.push_back(lower(trim(f.text)));
    return names;
}

void require_columns(const std::vector<csv_field>& fields, std::size_t expected,
                     std::string_view origin, std::size_t line_no) {
    if (fields.size() != expected)
        throw parse_error(origin, line_no,
                          "expected " + std::to_string(expected) + " fields, got " +
                              std::to_string(fields.size()));
}

// Shortest decimal representation that reads back to the same double.
std::string format_number(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string quote_field(const std::string& s) {
    const bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos ||
                              (!s.empty() && (std::isspace(static_cast<unsigned char>(s.front())) ||
                                              std::isspace(static_cast<unsigned char>(s.back()))));
    if (!needs_quotes) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

}  // namespace

weighted_sample parse_weighted_csv_text(std::string_view text, std::string_view origin) {
    record_reader reader{text, origin};
    std::vector<csv_field> fields;
    if (!reader.next(fields)) throw parse_error(origin, 1, "missing header");
    const auto names = header_names(fields);
    bool has_weight = false;
    if (names.size() == 1 && names[0] == "value") {
        has_weight = false;
    } else if (names.size() == 2 && names[0] == "value" && names[1] == "weight") {
        has_weight = true;
    } else {
        throw parse_error(origin, reader.line_no,
                          "expected header 'value' or 'value,weight'");
    }
    weighted_sample s;
    while (reader.next(fields)) {
        require_columns(fields, has_weight ? 2 : 1, origin, reader.line_no);
        s.values.push_back(parse_number(fields[0], origin, reader.line_no, "value"));
        s.weights.push_back(
            has_weight ? parse_number(fields[1], origin, reader.line_no, "weight") : 1.0);
    }
    if (s.values.empty()) throw parse_error(origin, reader.line_no + 1, "no data rows");
    return s;
}

weighted_sample parse_weighted_csv(const std::filesystem::path& path) {
    return parse_weighted_csv_text(read_file(path), path.string());
}

empirical_distribution parse_distribution_csv_text(std::string_view text,
                                                   std::string_view origin) {
    record_reader reader{text, origin};
    std::vector<csv_field> fields;
    if (!reader.next(fields)) throw parse_error(origin, 1, "missing header");
    const auto names = header_names(fields);
    bool is_counts = false;
    if (names.size() == 2 && names[0] == "value" && names[1] == "probability") {
        is_counts = false;
    } else if (names.size() == 2 && names[0] == "value" && names[1] == "count") {
        is_counts = true;
    } else {
        throw parse_error(origin, reader.line_no,
                          "expected header 'value,probability' or 'value,count'");
    }
    std::vector<double> outcomes;
    std::vector<double> second;
    while (reader.next(fields)) {
        require_columns(fields, 2, origin, reader.line_no);
        outcomes.push_back(parse_number(fields[0], origin, reader.line_no, "value"));
        second.push_back(parse_number(fields[1], origin, reader.line_no,
                                      is_counts ? "count" : "probability"));
    }
    if (outcomes.empty()) throw parse_error(origin, reader.line_no + 1, "no data rows");
    try {
        if (is_counts) return empirical_distribution::from_counts(std::move(outcomes), std::move(second));
        empirical_distribution d;
        d.outcomes = std::move(outcomes);
        d.probabilities = std::move(second);
        validate(d);
        return d;
    } catch (const invalid_distribution& e) {
        throw parse_error(origin, reader.line_no, e.what());
    }
}

empirical_distribution parse_distribution_csv(const std::filesystem::path& path) {
    return parse_distribution_csv_text(read_file(path), path.string());
}

index_basket parse_basket_csv_text(std::string_view text, std::string_view origin) {
    record_reader reader{text, origin};
    std::vector<csv_field> fields;
    if (!reader.next(fields)) throw parse_error(origin, 1, "missing header");
    const auto names = header_names(fields);
    if (names.size() != 3 || names[0] != "category" || names[1] != "weight" ||
        names[2] != "index")
        throw parse_error(origin, reader.line_no, "expected header 'category,weight,index'");
    index_basket b;
    while (reader.next(fields)) {
        require_columns(fields, 3, origin, reader.line_no);
        basket_entry e;
        e.category = fields[0].quoted ? fields[0].text : std::string(trim(fields[0].text));
        e.weight = parse_number(fields[1], origin, reader.line_no, "weight");
        e.sub_index = parse_number(fields[2], origin, reader.line_no, "index");
        b.entries.push_back(std::move(e));
    }
    if (b.entries.empty()) throw parse_error(origin, reader.line_no + 1, "no data rows");
    try {
        validate(b);
    } catch (const invalid_basket& e) {
        throw parse_error(origin, reader.line_no, e.what());
    }
    return b;
}

index_basket parse_basket_csv(const std::filesystem::path& path) {
    return parse_basket_csv_text(read_file(path), path.string());
}

point_cloud parse_points_csv_text(std::string_view text, std::string_view origin) {
    record_reader reader{text, origin};
    std::vector<csv_field> fields;
    if (!reader.next(fields)) throw parse_error(origin, 1, "missing header");
    const auto names = header_names(fields);
    if (names.size() != 2 || names[0] != "x" || names[1] != "y")
        throw parse_error(origin, reader.line_no, "expected header 'x,y'");
    point_cloud c;
    while (reader.next(fields)) {
        require_columns(fields, 2, origin, reader.line_no);
        point2 p;
        p.x = parse_number(fields[0], origin, reader.line_no, "x");
        p.y = parse_number(fields[1], origin, reader.line_no, "y");
        c.points.push_back(p);
    }
    if (c.points.empty()) throw parse_error(origin, reader.line_no + 1, "no data rows");
    return c;
}

point_cloud parse_points_csv(const std::filesystem::path& path) {
    return parse_points_csv_text(read_file(path), path.string());
}

std::string emit_weighted_csv(const weighted_sample& s) {
    std::string out = "value,weight\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += format_number(s.values[i]) + "," + format_number(s.weights[i]) + "\n";
    return out;
}

std::string emit_distribution_csv(const empirical_distribution& d) {
    std::string out = "value,probability\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        out += format_number(d.outcomes[i]) + "," + format_number(d.probabilities[i]) + "\n";
    return out;
}

std::string emit_basket_csv(const index_basket& b) {
    std::string out = "category,weight,index\n";
    for (const auto& e : b.entries)
        out += quote_field(e.category) + "," + format_number(e.weight) + "," +
               format_number(e.sub_index) + "\n";
    return out;
}

std::string emit_points_csv(const point_cloud& c) {
    std::string out = "x,y\n";
    for (const auto& p : c.points)
        out += format_number(p.x) + "," + format_number(p.y) + "\n";
    return out;
}

}  // namespace pmeans
