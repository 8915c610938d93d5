#pragma once

#include <stdexcept>
#include <string>

namespace synto {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Raised when an exact result is neither finite nor cofinite. The properclass
// layer is the sanctioned fallback for callers that can live with an oracle.
class not_representable : public error {
public:
    explicit not_representable(const std::string& what_arg) : error(what_arg) {}
};

class not_a_function : public error {
public:
    explicit not_a_function(const std::string& what_arg) : error(what_arg) {}
};

class choice_violation : public error {
public:
    explicit choice_violation(const std::string& what_arg) : error(what_arg) {}
};

class undecidable_fragment : public error {
public:
    explicit undecidable_fragment(const std::string& what_arg) : error(what_arg) {}
};

class size_limit : public error {
public:
    explicit size_limit(const std::string& what_arg) : error(what_arg) {}
};

class parse_error : public error {
public:
    parse_error(const std::string& what_arg, std::size_t position)
        : error(what_arg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

class eval_error : public error {
public:
    explicit eval_error(const std::string& what_arg) : error(what_arg) {}
};

} // namespace synto
