#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jsperfect/designs.hpp"
#include "jsperfect/johnson.hpp"

namespace jsp {

// Raised for malformed input; line() is 1-based, 0 when the problem is global.
class FileError : public std::runtime_error {
public:
    FileError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// One word per line as 0-based indices separated by blanks. '#' lines and blank
// lines are skipped. An optional header "n=<n> w=<w>" or "n1= w1= n2= w2="
// may precede the words.
struct RawFile {
    std::optional<unsigned> n, w, n1, w1, n2, w2;
    std::vector<std::size_t> lines;           // source line of each row
    std::vector<std::vector<unsigned>> rows;
    bool doubly_header() const { return n1.has_value(); }
};
RawFile read_raw(std::istream& in);

// Space parameters given outside the file take precedence when the file has no
// header; a header that disagrees with them is an error. Without either, w is
// the size of the first row and n is one more than the largest index.
struct SpaceHint {
    std::optional<unsigned> n, w;
};
Code read_code(std::istream& in, const SpaceHint& hint = {});
BlockDesign read_design(std::istream& in, const SpaceHint& hint = {});

struct DoublyHint {
    std::optional<unsigned> n1, w1, n2, w2;
};
DoublyCode read_doubly_code(std::istream& in, const DoublyHint& hint = {});

}  // namespace jsp
