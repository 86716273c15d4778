#include <convexgeo/eset.hpp>

#include <convexgeo/error.hpp>

#include <cctype>

namespace convexgeo {

GroundSet::GroundSet(std::string labels) : labels_(std::move(labels)) {
    if (labels_.empty() || labels_.size() > static_cast<std::size_t>(kMaxGround))
        throw InputError("ground set must have 1.." + std::to_string(kMaxGround) + " elements");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const char c = labels_[i];
        if (!std::isgraph(static_cast<unsigned char>(c)) || c == '-' || c == '>' || c == ',' || c == '#')
            throw InputError(std::string("invalid ground label '") + c + "'");
        if (labels_.find(c) != i)
            throw InputError(std::string("duplicate ground label '") + c + "'");
    }
}

GroundSet GroundSet::letters(int n) {
    if (n < 1 || n > kMaxGround)
        throw InputError("ground set must have 1.." + std::to_string(kMaxGround) + " elements");
    std::string s;
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + i));
    return GroundSet(std::move(s));
}

Element GroundSet::find(char label) const {
    const auto pos = labels_.find(label);
    return pos == std::string::npos ? -1 : static_cast<Element>(pos);
}

Element GroundSet::index_of(char label) const {
    const Element e = find(label);
    if (e < 0) throw InputError(std::string("unknown label '") + label + "'");
    return e;
}

std::string GroundSet::format(ESet s) const {
    std::string out;
    for (Element e : s) out.push_back(label(e));
    return out;
}

ESet GroundSet::parse(std::string_view text) const {
    if (text == "0" && find('0') < 0) return ESet();
    ESet s;
    for (char c : text) s = s.with(index_of(c));
    return s;
}

}  // namespace convexgeo
