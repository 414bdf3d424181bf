#include "planes/label.hpp"

#include <cctype>

namespace planes {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

LabelNs label_ns(const std::string& label) {
    auto colon = label.find(':');
    if (colon == std::string::npos) return LabelNs::Raw;
    std::string ns = label.substr(0, colon);
    if (ns == "anchor") return LabelNs::Anchor;
    if (ns == "vtx") return LabelNs::Vtx;
    if (ns == "edge") return LabelNs::Edge;
    if (ns == "q") return LabelNs::Q;
    if (ns == "free") return LabelNs::Free;
    return LabelNs::Raw;
}

bool label_valid(const std::string& label) {
    if (label.empty()) return false;
    for (char c : label)
        if (std::isspace(static_cast<unsigned char>(c)) || std::iscntrl(static_cast<unsigned char>(c)))
            return false;
    switch (label_ns(label)) {
        case LabelNs::Raw:
        case LabelNs::Anchor:
            return true;
        case LabelNs::Vtx: {
            // vtx:<a>:<j>, j in 0..2
            auto c1 = label.find(':');
            auto c2 = label.rfind(':');
            if (c2 == c1 || c2 + 2 != label.size()) return false;
            if (!all_digits(label, c1 + 1, c2)) return false;
            char j = label[c2 + 1];
            return j == '0' || j == '1' || j == '2';
        }
        case LabelNs::Edge: {
            // edge:<d>-<a> with d < a numerically
            auto c1 = label.find(':');
            auto dash = label.find('-', c1 + 1);
            if (dash == std::string::npos) return false;
            if (!all_digits(label, c1 + 1, dash)) return false;
            if (!all_digits(label, dash + 1, label.size())) return false;
            long d = std::stol(label.substr(c1 + 1, dash - c1 - 1));
            long a = std::stol(label.substr(dash + 1));
            return d < a;
        }
        case LabelNs::Q: {
            // q:<site>:<letter>
            auto c1 = label.find(':');
            auto c2 = label.rfind(':');
            if (c2 == c1 || c2 + 2 != label.size()) return false;
            if (c2 == c1 + 1) return false; // empty site
            char letter = label[c2 + 1];
            return letter >= 'a' && letter <= 'o' && letter != 'i' && letter != 'j';
        }
        case LabelNs::Free: {
            // free:<n>:<payload>; the payload embeds line labels and is opaque
            auto c1 = label.find(':');
            auto c2 = label.find(':', c1 + 1);
            if (c2 == std::string::npos || c2 + 1 >= label.size()) return false;
            return all_digits(label, c1 + 1, c2);
        }
    }
    return false;
}

std::string vtx_label(int vertex, int j) {
    return "vtx:" + std::to_string(vertex) + ":" + std::to_string(j);
}

std::string edge_label(int smaller, int larger) {
    return "edge:" + std::to_string(smaller) + "-" + std::to_string(larger);
}

std::string q_label(const std::string& site, char letter) {
    return "q:" + site + ":" + std::string(1, letter);
}

std::string free_label(int level, const std::string& line_a, const std::string& line_b) {
    return "free:" + std::to_string(level) + ":" + line_a + "|" + line_b;
}

} // namespace planes
