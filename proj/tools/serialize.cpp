#include "serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace diracwell::cli {

std::string fmt_double(double v) {
    if (!std::isfinite(v)) {
        throw std::logic_error("fmt_double: non-finite values must be omitted upstream");
    }
    char buf[48];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc()) {
        throw std::logic_error("fmt_double: conversion failed");
    }
    return std::string(buf, res.ptr);
}

JsonWriter::JsonWriter() { stack_.push_back({Ctx::Root, false}); }

void JsonWriter::newline_indent(std::size_t depth) {
    out_.push_back('\n');
    out_.append(2 * depth, ' ');
}

void JsonWriter::append_string(std::string_view s) {
    out_.push_back('"');
    for (const char ch : s) {
        const unsigned char c = static_cast<unsigned char>(ch);
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\b': out_ += "\\b"; break;
            case '\f': out_ += "\\f"; break;
            case '\n': out_ += "\\n"; break;
            case '\r': out_ += "\\r"; break;
            case '\t': out_ += "\\t"; break;
            default:
                if (c < 0x20) {
                    char esc[8];
                    std::snprintf(esc, sizeof(esc), "\\u%04x", c);
                    out_ += esc;
                } else {
                    out_.push_back(ch);  // UTF-8 passes through verbatim
                }
        }
    }
    out_.push_back('"');
}

void JsonWriter::pre_value() {
    if (done_) throw std::logic_error("JsonWriter: document already finalized");
    Frame& top = stack_.back();
    switch (top.ctx) {
        case Ctx::Root:
            if (top.any) throw std::logic_error("JsonWriter: multiple roots");
            break;
        case Ctx::Object:
            if (!key_pending_) {
                throw std::logic_error("JsonWriter: value in object without key");
            }
            if (top.any) out_.push_back(',');
            newline_indent(stack_.size() - 1);
            append_string(pending_key_);
            out_ += ": ";
            key_pending_ = false;
            break;
        case Ctx::Array:
            if (top.any) out_.push_back(',');
            newline_indent(stack_.size() - 1);
            break;
    }
    top.any = true;
}

void JsonWriter::begin_object() {
    pre_value();
    out_.push_back('{');
    stack_.push_back({Ctx::Object, false});
}

void JsonWriter::end_object() {
    if (stack_.back().ctx != Ctx::Object || key_pending_) {
        throw std::logic_error("JsonWriter: unbalanced end_object");
    }
    const bool any = stack_.back().any;
    stack_.pop_back();
    if (any) newline_indent(stack_.size() - 1);
    out_.push_back('}');
}

void JsonWriter::begin_array() {
    pre_value();
    out_.push_back('[');
    stack_.push_back({Ctx::Array, false});
}

void JsonWriter::end_array() {
    if (stack_.back().ctx != Ctx::Array) {
        throw std::logic_error("JsonWriter: unbalanced end_array");
    }
    const bool any = stack_.back().any;
    stack_.pop_back();
    if (any) newline_indent(stack_.size() - 1);
    out_.push_back(']');
}

void JsonWriter::key(std::string_view k) {
    if (stack_.back().ctx != Ctx::Object || key_pending_) {
        throw std::logic_error("JsonWriter: key outside object or doubled");
    }
    pending_key_.assign(k);
    key_pending_ = true;
}

void JsonWriter::value(double v) {
    pre_value();
    out_ += fmt_double(v);
}

void JsonWriter::value(int v) { value(static_cast<long long>(v)); }

void JsonWriter::value(long long v) {
    pre_value();
    out_ += std::to_string(v);
}

void JsonWriter::value(unsigned long long v) {
    pre_value();
    out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
    pre_value();
    out_ += v ? "true" : "false";
}

void JsonWriter::value(std::string_view s) {
    pre_value();
    append_string(s);
}

void JsonWriter::value(const char* s) { value(std::string_view(s)); }

std::string JsonWriter::take() {
    if (stack_.size() != 1 || !stack_.back().any || key_pending_) {
        throw std::logic_error("JsonWriter: document incomplete");
    }
    done_ = true;
    out_.push_back('\n');
    return std::move(out_);
}

std::string csv_field(std::string_view s) {
    const bool needs_quotes =
        s.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(s);
    std::string q;
    q.reserve(s.size() + 2);
    q.push_back('"');
    for (const char c : s) {
        if (c == '"') q.push_back('"');
        q.push_back(c);
    }
    q.push_back('"');
    return q;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) row.push_back(',');
        row += csv_field(fields[i]);
    }
    row.push_back('\n');
    return row;
}

}  // namespace diracwell::cli
