#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace diracwell::cli {

// Decimal form with 17 significant digits: '.' separator regardless of
// locale, round-trips to the same bits. Finite inputs only.
std::string fmt_double(double v);

// Streaming JSON emitter with a fixed layout: two-space indentation, keys
// in call order, numbers through fmt_double. Identical call sequences give
// identical bytes. Misuse (value without a key inside an object, unbalanced
// begin/end) throws std::logic_error.
class JsonWriter {
public:
    JsonWriter();

    void begin_object();
    void end_object();
    void begin_array();
    void end_array();

    // Must precede every value inside an object.
    void key(std::string_view k);

    void value(double v);
    void value(int v);
    void value(long long v);
    void value(unsigned long long v);
    void value(bool v);
    void value(std::string_view s);
    void value(const char* s);

    // Finalize: the root container must be closed. Appends a trailing
    // newline and returns the document.
    std::string take();

private:
    enum class Ctx { Root, Object, Array };
    struct Frame {
        Ctx ctx;
        bool any;
    };

    void pre_value();
    void newline_indent(std::size_t depth);
    void append_string(std::string_view s);

    std::string out_;
    std::vector<Frame> stack_;
    std::string pending_key_;
    bool key_pending_ = false;
    bool done_ = false;
};

// One RFC-4180 field: quoted (with doubled inner quotes) only when the
// content requires it.
std::string csv_field(std::string_view s);

// Joins fields with commas and terminates the line with '\n'.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace diracwell::cli
