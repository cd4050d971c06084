#ifndef BLOCKTF_JSONIO_HPP
#define BLOCKTF_JSONIO_HPP

#include <string>
#include <vector>

namespace blocktf {

// Minimal deterministic JSON emitter: fields appear in insertion order and
// floating-point values render with 17 significant digits, so identical
// inputs produce byte-identical reports.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s) { return value(std::string(s)); }
    JsonWriter& value(double v);
    JsonWriter& value(long v);
    JsonWriter& value(int v) { return value(static_cast<long>(v)); }
    JsonWriter& value(unsigned v) { return value(static_cast<long>(v)); }
    JsonWriter& value(bool b);
    JsonWriter& raw(const std::string& json);  // pre-rendered fragment

    const std::string& str() const { return out_; }

    static std::string escape(const std::string& s);
    static std::string format_double(double v);

  private:
    void prefix();
    std::string out_;
    std::vector<bool> first_in_scope_;
    bool pending_key_ = false;
};

// FNV-1a 64-bit hex digest used for the inputs_digest report field.
std::string fnv1a_digest(const std::string& data);

} // namespace blocktf

#endif
