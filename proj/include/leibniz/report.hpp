#ifndef LEIBNIZ_REPORT_HPP
#define LEIBNIZ_REPORT_HPP

#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// One violated condition: which axiom, at which basis indices, with what
/// residual coefficients (serialized exactly).
struct Witness {
    std::string condition;
    std::vector<int> indices;             // 1-based, matching file formats
    std::vector<std::string> residual;    // nonzero residual coefficients
};

struct CheckReport {
    bool holds = true;
    std::string subject;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, std::string>> notes;  // key/value extras

    static CheckReport pass(std::string subject) { return {true, std::move(subject), {}, {}}; }

    void fail(Witness w) {
        holds = false;
        witnesses.push_back(std::move(w));
    }

    void merge(const CheckReport& other) {
        if (!other.holds) holds = false;
        for (const auto& w : other.witnesses) witnesses.push_back(w);
    }
};

}  // namespace leibniz

#endif
