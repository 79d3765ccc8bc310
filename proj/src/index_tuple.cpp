#include "qmzv/index_tuple.hpp"

#include <charconv>
#include <stdexcept>

namespace qmzv {

unsigned weight(const Composition& s) {
    unsigned w = 0;
    for (unsigned x : s) w += x;
    return w;
}

IndexTuple::IndexTuple(std::vector<unsigned> s_in, std::vector<unsigned> t_in)
    : s(std::move(s_in)), t(std::move(t_in)) {
    if (s.size() != t.size()) {
        throw std::invalid_argument("index tuple needs matching exponent lists");
    }
}

unsigned IndexTuple::weight() const {
    unsigned w = 0;
    for (unsigned x : s) w += x;
    return w;
}

IndexTuple IndexTuple::z_index(const Composition& comp) {
    std::vector<unsigned> t;
    t.reserve(comp.size());
    for (unsigned x : comp) {
        if (x == 0) {
            throw std::invalid_argument("composition entries must be positive");
        }
        t.push_back(x - 1);
    }
    return IndexTuple(comp, std::move(t));
}

StrictPattern::StrictPattern(unsigned width_in, std::set<unsigned> strict_in)
    : width(width_in), strict(std::move(strict_in)) {
    for (unsigned p : strict) {
        if (p < 1 || p >= width) {
            throw std::invalid_argument("strict position outside 1..width-1");
        }
    }
}

StrictPattern StrictPattern::from_composition(const Composition& s) {
    unsigned w = 0;
    std::set<unsigned> positions;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) {
            throw std::invalid_argument("composition entries must be positive");
        }
        w += s[i];
        if (i + 1 < s.size()) {
            positions.insert(w);
        }
    }
    return StrictPattern(w, std::move(positions));
}

namespace {

unsigned parse_positive(std::string_view text, std::string_view what) {
    unsigned value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
        throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

Composition parse_composition(std::string_view text) {
    Composition out;
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        const std::size_t caret = item.find('^');
        if (caret == std::string_view::npos) {
            out.push_back(parse_positive(item, "composition part"));
        } else {
            const unsigned part = parse_positive(item.substr(0, caret), "composition part");
            const unsigned count = parse_positive(item.substr(caret + 1), "repetition count");
            out.insert(out.end(), count, part);
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_composition(const Composition& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

namespace {

void compositions_rec(unsigned remaining, Composition& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (unsigned first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of_weight(unsigned w) {
    std::vector<Composition> out;
    if (w == 0) {
        return out;
    }
    Composition prefix;
    compositions_rec(w, prefix, out);
    return out;
}

std::vector<Composition> compositions_up_to_weight(unsigned wmax) {
    std::vector<Composition> out;
    for (unsigned w = 1; w <= wmax; ++w) {
        auto part = compositions_of_weight(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace qmzv
