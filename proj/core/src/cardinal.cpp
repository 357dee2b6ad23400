#include "swr/cardinal.hpp"

#include "swr/errors.hpp"

namespace swr {

std::string Cardinal::to_string() const {
    return finite_ ? std::to_string(n_) : std::string("omega");
}

Cardinal cardinal_add(Cardinal a, Cardinal b) {
    if (a.is_omega() || b.is_omega())
        return Cardinal::omega();
    return Cardinal::finite(a.value() + b.value());
}

Cardinal parse_cardinal(std::string_view s) {
    if (s == "omega")
        return Cardinal::omega();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("bad cardinal literal '" + std::string(s) + "'");
    return Cardinal::finite(std::stoull(std::string(s)));
}

} // namespace swr
