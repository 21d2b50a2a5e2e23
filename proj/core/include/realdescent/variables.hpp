#pragma once

#include "realdescent/error.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace realdescent {

// Immutable, ordered list of variable names.  Cheap to copy (shared storage);
// equality is by name sequence so independently built contexts compare equal.
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(
              std::move(names))) {
        if (names_->empty())
            throw Error("variable context must contain at least one variable");
        for (std::size_t i = 0; i < names_->size(); ++i)
            for (std::size_t j = i + 1; j < names_->size(); ++j)
                if ((*names_)[i] == (*names_)[j])
                    throw Error("duplicate variable name '" + (*names_)[i] +
                                "'");
    }

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t k) const { return (*names_)[k]; }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t k = 0; k < names_->size(); ++k)
            if ((*names_)[k] == name)
                return k;
        return std::nullopt;
    }

    bool operator==(const VariableContext& o) const {
        return names_ == o.names_ || *names_ == *o.names_;
    }
    bool operator!=(const VariableContext& o) const { return !(*this == o); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

// Generates `count` names "<prefix>1".."<prefix>count"; if any would collide
// with a taken name the prefix is doubled ("tt", "ttt", ...) until the whole
// batch is fresh.  Deterministic.
inline std::vector<std::string> fresh_names(
    const std::string& prefix, std::size_t count,
    const std::vector<std::string>& taken) {
    std::string p = prefix;
    for (;;) {
        std::vector<std::string> out;
        out.reserve(count);
        bool clash = false;
        for (std::size_t k = 1; k <= count && !clash; ++k) {
            std::string name = p + std::to_string(k);
            for (const auto& t : taken)
                if (t == name) {
                    clash = true;
                    break;
                }
            out.push_back(std::move(name));
        }
        if (!clash)
            return out;
        p += prefix;
    }
}

} // namespace realdescent
