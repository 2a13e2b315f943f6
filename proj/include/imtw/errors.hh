/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef IMTW_GUARD_ERRORS_HH
#define IMTW_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace imtw
{
    /// Precondition of an operation violated by the caller (bad vertex id, not a matching, ...).
    class ContractError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An exhaustive routine would exceed its configured guard.
    class ResourceError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A bag handed to an automaton is larger than its width allows.
    class WidthError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A decomposition does not have the shape an operation requires.
    class StructureError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An internal invariant failed. Always a bug or a breached precondition.
    class InternalError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    class ParseError : public std::runtime_error
    {
        private:
            int _line;

        public:
            ParseError(int line, const std::string & message) :
                std::runtime_error("line " + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            auto line() const -> int
            {
                return _line;
            }
    };
}

#endif
