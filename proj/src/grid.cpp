#include "fungal/grid.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fungal {

Configuration::Configuration(int rows, int cols, State background)
    : Configuration(rows, cols, background, std::vector<State>(size_t(std::max(rows, 0)) * std::max(cols, 0), 0)) {}

Configuration::Configuration(int rows, int cols, State background, std::vector<State> cells)
    : rows_(rows), cols_(cols), background_(background), cells_(std::move(cells)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("configuration needs at least one row and one column");
    if (background > 1) throw std::invalid_argument("background must be 0 or 1");
    if (cells_.size() != size_t(rows) * cols) throw std::invalid_argument("cell count does not match dimensions");
    for (State v : cells_)
        if (v > 1) throw std::invalid_argument("cell states must be 0 or 1");
}

long Configuration::count_ones() const {
    return std::count(cells_.begin(), cells_.end(), State{1});
}

Configuration Configuration::padded(int margin) const {
    return window(-margin, -margin, rows_ + 2 * margin, cols_ + 2 * margin);
}

Configuration Configuration::window(long r0, long c0, int rows, int cols) const {
    Configuration out(rows, cols, background_);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.set(r, c, get(r0 + r, c0 + c));
    return out;
}

namespace {

bool parse_int(std::string_view s, long& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Configuration parse_grid(std::istream& in) {
    std::string line;
    long lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (!line.empty() && line[0] == '#') continue;
        have_header = true;
        break;
    }
    if (!have_header) throw ParseError("missing header", lineno + 1);

    // Header is exactly three integers separated by single spaces.
    long dims[3];
    {
        std::string_view h = line;
        for (int i = 0; i < 3; ++i) {
            size_t sp = i < 2 ? h.find(' ') : h.size();
            if (sp == std::string_view::npos || !parse_int(h.substr(0, sp), dims[i]))
                throw ParseError("malformed header", lineno);
            h = i < 2 ? h.substr(sp + 1) : std::string_view{};
        }
    }
    if (dims[0] < 1 || dims[1] < 1 || dims[2] < 0 || dims[2] > 1 || dims[0] > (1L << 24) || dims[1] > (1L << 24))
        throw ParseError("malformed header", lineno);
    const int rows = int(dims[0]), cols = int(dims[1]);

    std::vector<State> cells;
    cells.reserve(size_t(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) throw ParseError("missing row", lineno + 1);
        ++lineno;
        strip_cr(line);
        if (long(line.size()) != cols) throw ParseError("ragged row", lineno);
        for (char ch : line) {
            if (ch != '0' && ch != '1') throw ParseError(std::string("bad character '") + ch + "'", lineno);
            cells.push_back(State(ch - '0'));
        }
    }
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (!line.empty()) throw ParseError("unexpected data after last row", lineno);
    }
    return Configuration(rows, cols, State(dims[2]), std::move(cells));
}

Configuration parse_grid(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_grid(in);
}

Configuration load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return parse_grid(in);
}

std::string serialize(const Configuration& c) {
    std::string out = std::to_string(c.rows()) + ' ' + std::to_string(c.cols()) + ' ' +
                      std::to_string(int(c.background())) + '\n';
    out.reserve(out.size() + size_t(c.rows()) * (c.cols() + 1));
    for (int r = 0; r < c.rows(); ++r) {
        for (int col = 0; col < c.cols(); ++col) out.push_back(char('0' + c.at(r, col)));
        out.push_back('\n');
    }
    return out;
}

void save_grid(const Configuration& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize(c);
}

Configuration from_rows(const std::vector<std::string>& rows, State background) {
    size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.size());
    Configuration out(int(rows.size()), int(width), background);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) out.set(int(r), int(c), rows[r][c] == '1');
    return out;
}

RenderFormat parse_render_format(std::string_view name) {
    if (name == "ascii") return RenderFormat::ascii;
    if (name == "pgm") return RenderFormat::pgm;
    throw std::invalid_argument("unknown render format '" + std::string(name) + "'");
}

std::string render(const Configuration& c, RenderFormat format) {
    std::string out;
    if (format == RenderFormat::ascii) {
        for (int r = 0; r < c.rows(); ++r) {
            for (int col = 0; col < c.cols(); ++col) out.push_back(char('0' + c.at(r, col)));
            out.push_back('\n');
        }
        return out;
    }
    out = "P2\n" + std::to_string(c.cols()) + ' ' + std::to_string(c.rows()) + "\n255\n";
    for (int r = 0; r < c.rows(); ++r) {
        for (int col = 0; col < c.cols(); ++col) {
            if (col) out.push_back(' ');
            out += c.at(r, col) ? "0" : "255";
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace fungal
