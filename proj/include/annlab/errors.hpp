#ifndef ANNLAB_ERRORS_HPP
#define ANNLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace annlab {

/* Base class for everything thrown by the library. */
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Malformed input documents or polynomial strings. Exit code 2. */
struct parse_error : error {
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    explicit parse_error(const std::string& msg) : error(msg), line(0), col(0) {}
    int line;
    int col;
};

/* A mathematical precondition of an operation does not hold. Exit code 3. */
struct hypothesis_error : error {
    using error::error;
};

/* An internal invariant failed; indicates a bug, never user error. Exit code 4. */
struct internal_error : error {
    using error::error;
};

#define ANNLAB_CHECK(cond, msg)                                      \
    do {                                                             \
        if (!(cond)) throw ::annlab::internal_error(std::string("invariant breach: ") + (msg)); \
    } while (0)

}  // namespace annlab

#endif
