#include "rdu/system_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "rdu/parse.hpp"

namespace rdu {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_names(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

std::optional<std::string_view> header(std::string_view line, std::string_view key) {
    if (line.size() > key.size() && line.substr(0, key.size()) == key && line[key.size()] == ':')
        return line.substr(key.size() + 1);
    return std::nullopt;
}

}  // namespace

SystemFile parse_system(std::string_view text) {
    std::optional<std::vector<std::string>> params, vars;
    std::vector<std::pair<std::size_t, std::string>> poly_lines;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineno;
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (auto rest = header(line, "parameters")) {
            if (params || vars || !poly_lines.empty())
                throw ParseError("'parameters:' must come first and only once", lineno, 1);
            params = split_names(*rest);
        } else if (auto rest = header(line, "variables")) {
            if (vars || !poly_lines.empty())
                throw ParseError("'variables:' must precede the polynomials and appear once", lineno, 1);
            vars = split_names(*rest);
        } else {
            if (!vars)
                throw ParseError("polynomial before 'variables:' line", lineno, 1);
            const std::size_t col = static_cast<std::size_t>(line.data() - raw.data());
            poly_lines.emplace_back(lineno, std::string(col, ' ') + std::string(line));
        }
        if (end == text.size())
            break;
    }
    if (!vars || vars->empty())
        throw ParseError("missing or empty 'variables:' line", lineno, 1);
    if (poly_lines.empty())
        throw ParseError("no polynomials", lineno, 1);

    SystemFile out;
    try {
        out.ctx = make_context(params.value_or(std::vector<std::string>{}), *vars);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
    for (const auto& [ln, s] : poly_lines)
        out.polys.push_back(parse_polynomial(s, out.ctx, ln));
    return out;
}

SystemFile read_system_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

std::string format_system(const SystemFile& s) {
    std::string out;
    if (s.ctx->num_params() > 0) {
        out += "parameters:";
        for (const auto& p : s.ctx->params())
            out += " " + p;
        out += "\n";
    }
    out += "variables:";
    for (const auto& v : s.ctx->vars())
        out += " " + v;
    out += "\n";
    for (const auto& p : s.polys)
        out += p.str() + "\n";
    return out;
}

}  // namespace rdu
