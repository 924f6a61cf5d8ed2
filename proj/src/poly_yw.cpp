#include "akzeta/poly_yw.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace akzeta {

PolyYW PolyYW::substitute(const PolyYW& img_y, const PolyYW& img_w) const {
    int dy = degree(YW::y), dw = degree(YW::w);
    std::vector<PolyYW> py(dy + 1), pw(dw + 1);
    py[0] = PolyYW(1);
    for (int k = 1; k <= dy; ++k) py[k] = py[k - 1] * img_y;
    pw[0] = PolyYW(1);
    for (int k = 1; k <= dw; ++k) pw[k] = pw[k - 1] * img_w;

    PolyYW r;
    for (const auto& [m, c] : terms_) r += c * (py[m.first] * pw[m.second]);
    return r;
}

std::string PolyYW::str() const {
    if (terms_.empty()) return "0";

    std::vector<std::pair<Mono, GaussianRational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ts) {
        std::string mono;
        if (m.first > 0) {
            mono += "y";
            if (m.first > 1) mono += "^" + std::to_string(m.first);
        }
        if (m.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "w";
            if (m.second > 1) mono += "^" + std::to_string(m.second);
        }

        std::string cs;
        bool negative_printed = false;
        if (mono.empty()) {
            cs = c.str();
        } else if (c == GaussianRational(1)) {
            cs = "";
        } else if (c == -GaussianRational(1)) {
            cs = "-";
            negative_printed = true;
        } else if (c.is_real() || c.re() == 0) {
            cs = c.str() + "*";
        } else {
            cs = "(" + c.str() + ")*";
        }

        bool leads_negative = negative_printed || (!cs.empty() && cs[0] == '-');
        if (!first && !leads_negative) os << "+";
        os << cs << mono;
        first = false;
    }
    return os.str();
}

}  // namespace akzeta
