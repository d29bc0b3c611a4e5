#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fungal {

using State = std::uint8_t;

struct CellRef {
    long row = 0;
    long col = 0;
    friend bool operator==(const CellRef&, const CellRef&) = default;
    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

// Finite rectangle of binary cells surrounded by a uniform background.
// Row 0 is the top line of the file, col 0 the leftmost character.
class Configuration {
public:
    Configuration(int rows, int cols, State background);
    Configuration(int rows, int cols, State background, std::vector<State> cells);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    State background() const { return background_; }

    bool contains(long r, long c) const { return r >= 0 && c >= 0 && r < rows_ && c < cols_; }
    bool contains(CellRef x) const { return contains(x.row, x.col); }

    // Unchecked read of a cell inside the rectangle.
    State at(int r, int c) const { return cells_[static_cast<size_t>(r) * cols_ + c]; }
    // Total read: cells outside the rectangle return the background.
    State get(CellRef x) const { return contains(x) ? at(int(x.row), int(x.col)) : background_; }
    State get(long r, long c) const { return get(CellRef{r, c}); }

    void set(int r, int c, State v) { cells_[static_cast<size_t>(r) * cols_ + c] = v; }

    const std::vector<State>& cells() const { return cells_; }
    long count_ones() const;

    // Copy of this configuration inside a larger rectangle whose extra cells hold the background.
    Configuration padded(int margin) const;
    // Sub-rectangle [r0, r0+rows) x [c0, c0+cols); reads outside use background.
    Configuration window(long r0, long c0, int rows, int cols) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    int rows_;
    int cols_;
    State background_;
    std::vector<State> cells_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line)
        : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) : what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

Configuration parse_grid(std::istream& in);
Configuration parse_grid(std::string_view text);
Configuration load_grid(const std::string& path);

// Canonical text: header "rows cols background" then one line of '0'/'1' per row.
std::string serialize(const Configuration& c);
void save_grid(const Configuration& c, const std::string& path);

// Rows given top to bottom; '1' is state 1 and any other character is state 0.
Configuration from_rows(const std::vector<std::string>& rows, State background);

enum class RenderFormat { ascii, pgm };
RenderFormat parse_render_format(std::string_view name);
// ascii: one line of '0'/'1' per row. pgm: plain graymap, state 0 white and state 1 black.
std::string render(const Configuration& c, RenderFormat format);

}  // namespace fungal
