#include "ndict/value.hpp"

#include "ndict/node.hpp"

namespace ndict {

std::size_t Array::size() const {
  return std::visit([](const auto& v) { return v.size(); }, v_);
}

Value Value::of_text(std::string v) {
  if (!is_valid_utf8(v))
    throw Error(Errc::BadValue, "text values must be valid UTF-8");
  return Value(std::move(v));
}

Value Value::of_node(Node v) {
  return Value(std::make_unique<Node>(std::move(v)));
}

Value::Value(const Value& other)
    : v_(std::visit(
          [](const auto& alt) -> decltype(v_) {
            using T = std::decay_t<decltype(alt)>;
            if constexpr (std::is_same_v<T, std::unique_ptr<Node>>) {
              return std::make_unique<Node>(*alt);
            } else {
              return alt;
            }
          },
          other.v_)) {}

Value& Value::operator=(const Value& other) {
  if (this != &other) {
    Value copy(other);
    v_ = std::move(copy.v_);
  }
  return *this;
}

Tag Value::tag() const {
  return static_cast<Tag>(v_.index());
}

const Node& Value::as_node() const {
  if (tag() != Tag::Node)
    throw Error(Errc::TypeMismatch, std::string("value is ") +
                                        tag_name(tag()) + ", wanted Node");
  return *std::get<std::unique_ptr<Node>>(v_);
}

Node& Value::as_node() {
  if (tag() != Tag::Node)
    throw Error(Errc::TypeMismatch, std::string("value is ") +
                                        tag_name(tag()) + ", wanted Node");
  return *std::get<std::unique_ptr<Node>>(v_);
}

double Value::to_double() const {
  switch (tag()) {
    case Tag::Int: return static_cast<double>(as_int());
    case Tag::UInt: return static_cast<double>(as_uint());
    case Tag::Float: return as_float();
    default:
      throw Error(Errc::TypeMismatch,
                  std::string(tag_name(tag())) + " is not numeric");
  }
}

}  // namespace ndict
