#include "kdesign/design_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "kdesign/errors.hpp"

namespace kdesign {

namespace {

template <typename Int>
bool parse_decimal(std::string_view text, Int& value) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
        return false;
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

struct Header {
    std::uint32_t v;
    std::uint64_t b;
};

Header parse_header(std::string_view line) {
    constexpr std::string_view prefix = "DESIGN v=";
    constexpr std::string_view separator = " b=";
    if (line.substr(0, prefix.size()) != prefix) {
        throw ParseError(1, "expected header 'DESIGN v=<v> b=<b>'");
    }
    line.remove_prefix(prefix.size());
    const auto sep = line.find(separator);
    Header h{};
    if (sep == std::string_view::npos || !parse_decimal(line.substr(0, sep), h.v) ||
        !parse_decimal(line.substr(sep + separator.size()), h.b)) {
        throw ParseError(1, "expected header 'DESIGN v=<v> b=<b>'");
    }
    return h;
}

std::vector<Variety> parse_block(std::string_view line, std::size_t lineno, std::uint32_t v) {
    if (line.empty()) {
        throw ParseError(lineno, "empty block line");
    }
    std::vector<Variety> ids;
    std::size_t pos = 0;
    for (;;) {
        const auto space = line.find(' ', pos);
        const std::string_view token = line.substr(pos, space == std::string_view::npos ? space : space - pos);
        Variety id{};
        if (!parse_decimal(token, id)) {
            throw ParseError(lineno, "bad variety id '" + std::string(token) + "'");
        }
        if (id >= v) {
            throw ParseError(lineno, "variety " + std::to_string(id) + " out of range for v=" + std::to_string(v));
        }
        if (!ids.empty() && id <= ids.back()) {
            throw ParseError(lineno, "block is not strictly ascending");
        }
        ids.push_back(id);
        if (space == std::string_view::npos) {
            break;
        }
        pos = space + 1;
    }
    return ids;
}

}  // namespace

Design read_design(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(1, "missing header");
    }
    const Header header = parse_header(line);
    Design design(header.v);
    std::uint64_t lines = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        design.add(Block(parse_block(line, lineno, header.v)));
        ++lines;
    }
    if (lines != header.b) {
        throw ParseError(lineno, "header declares b=" + std::to_string(header.b) + " but file has " +
                                     std::to_string(lines) + " block lines");
    }
    return design;
}

Design read_design(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_design(in);
}

Design read_design_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_design(in);
}

void write_design(const Design& d, std::ostream& out) {
    out << "DESIGN v=" << d.variety_count() << " b=" << d.block_count() << '\n';
    std::string line;
    for (const auto& [block, mult] : d.blocks()) {
        line.clear();
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) {
                line += ' ';
            }
            line += std::to_string(block[i]);
        }
        line += '\n';
        for (std::uint64_t m = 0; m < mult; ++m) {
            out << line;
        }
    }
}

std::string write_design(const Design& d) {
    std::ostringstream out;
    write_design(d, out);
    return out.str();
}

}  // namespace kdesign
