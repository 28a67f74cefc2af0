#include "lnd/ring.hpp"

#include "lnd/errors.hpp"
#include "lnd/groebner.hpp"

namespace lnd {

RingPresentation::RingPresentation(ContextPtr context, std::vector<Polynomial> relations, TermOrder order)
    : context_(std::move(context)), relations_(std::move(relations)), order_(std::move(order)) {
    groebner_ = groebner_basis(relations_, order_);
    for (const auto& g : groebner_) leading_.push_back(g.leading_monomial(order_));
}

Ring make_ring(ContextPtr context, std::vector<Polynomial> relations, const TermOrder& order) {
    if (!context) throw InvalidArgument("missing variable context");
    if (order.variable_count() != context->size()) throw InvalidArgument("term order arity differs from variable count");
    for (const auto& r : relations) {
        if (!same_context(r.context(), context)) throw ContextMismatch();
        if (r.is_zero()) throw InvalidArgument("zero relation");
        if (r.is_constant()) throw ZeroRing();
    }
    Ring ring(new RingPresentation(std::move(context), std::move(relations), order));
    if (ring->groebner().size() == 1 && ring->groebner().front().is_constant()) throw ZeroRing();
    return ring;
}

Ring make_ring(ContextPtr context, std::vector<Polynomial> relations, OrderKind kind) {
    const std::size_t n = context ? context->size() : 0;
    return make_ring(std::move(context), std::move(relations), TermOrder::natural(kind, n));
}

Ring adjoin_variable(const Ring& ring, const std::string& name) {
    std::vector<std::string> names = ring->variables();
    names.push_back(name);
    ContextPtr wider = VariableContext::make(std::move(names));
    std::vector<Polynomial> relations;
    for (const auto& r : ring->relations()) relations.push_back(r.embed(wider));
    return make_ring(wider, std::move(relations), ring->order().extended());
}

Polynomial RingPresentation::reduce(const Polynomial& p) const {
    if (!same_context(p.context(), context_)) throw ContextMismatch();
    return normal_form(p, groebner_, order_);
}

bool RingPresentation::is_standard(const Monomial& m) const {
    for (const auto& l : leading_) {
        if (l.divides(m)) return false;
    }
    return true;
}

RingElement RingPresentation::element(const Polynomial& p) const {
    return RingElement(shared_from_this(), reduce(p));
}

RingElement RingPresentation::constant(const Rational& c) const {
    return RingElement(shared_from_this(), Polynomial(context_, c));
}

RingElement RingPresentation::variable(VarIndex v) const {
    return element(Polynomial::variable(context_, v));
}

RingElement RingPresentation::variable(const std::string& name) const {
    auto v = context_->index_of(name);
    if (!v) throw InvalidArgument("unknown variable '" + name + "'");
    return variable(*v);
}

RingElement RingPresentation::zero() const {
    return constant(0);
}

RingElement RingPresentation::one() const {
    return constant(1);
}

bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    return same_context(a->context(), b->context()) && a->order() == b->order() && a->groebner() == b->groebner();
}

RingElement::RingElement(Ring ring, Polynomial normal_form_repr)
    : ring_(std::move(ring)), repr_(std::move(normal_form_repr)) {
    if (!same_context(repr_.context(), ring_->context())) throw ContextMismatch();
}

void RingElement::check_ring(const RingElement& other) const {
    if (!same_ring(ring_, other.ring_)) throw ContextMismatch();
}

RingElement RingElement::pow(long long exponent) const {
    if (exponent < 0) throw InvalidArgument("negative power " + std::to_string(exponent));
    RingElement result = ring_->one();
    RingElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

RingElement RingElement::monic() const {
    return RingElement(ring_, repr_.monic(ring_->order()));
}

RingElement RingElement::embed(const Ring& wider) const {
    return wider->element(repr_.embed(wider->context()));
}

RingElement RingElement::operator-() const {
    return RingElement(ring_, -repr_);
}

RingElement& RingElement::operator+=(const RingElement& other) {
    check_ring(other);
    repr_ += other.repr_;
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    check_ring(other);
    repr_ -= other.repr_;
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
    check_ring(other);
    repr_ = ring_->reduce(repr_ * other.repr_);
    return *this;
}

RingElement& RingElement::operator*=(const Rational& scalar) {
    repr_ *= scalar;
    return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return same_ring(a.ring_, b.ring_) && a.repr_ == b.repr_;
}

bool element_less(const RingElement& a, const RingElement& b) {
    return compare(a.repr(), b.repr(), a.ring()->order()) < 0;
}

LocalizedElement::LocalizedElement(RingElement numerator, RingElement t, unsigned exponent)
    : numerator_(std::move(numerator)), t_(std::move(t)), exponent_(exponent) {
    if (t_.is_zero()) throw InvalidArgument("localization at zero");
    if (!same_ring(numerator_.ring(), t_.ring())) throw ContextMismatch();
    if (t_ == t_.ring()->one()) exponent_ = 0;
}

LocalizedElement LocalizedElement::embed(const RingElement& b, const RingElement& t) {
    return LocalizedElement(b, t, 0);
}

std::optional<RingElement> LocalizedElement::as_ring_element() const {
    if (exponent_ == 0) return numerator_;
    return std::nullopt;
}

void LocalizedElement::check_compatible(const LocalizedElement& other) const {
    if (!same_ring(ring(), other.ring())) throw ContextMismatch();
    if (!(t_ == other.t_)) throw InvalidArgument("localized elements use different denominators");
}

LocalizedElement LocalizedElement::operator-() const {
    return LocalizedElement(-numerator_, t_, exponent_);
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    a.check_compatible(b);
    const unsigned k = std::max(a.exponent_, b.exponent_);
    RingElement n = a.numerator_ * a.t_.pow(k - a.exponent_) + b.numerator_ * a.t_.pow(k - b.exponent_);
    return LocalizedElement(std::move(n), a.t_, k);
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) {
    return a + (-b);
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    a.check_compatible(b);
    return LocalizedElement(a.numerator_ * b.numerator_, a.t_, a.exponent_ + b.exponent_);
}

bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
    a.check_compatible(b);
    return a.numerator_ * a.t_.pow(b.exponent_) == b.numerator_ * a.t_.pow(a.exponent_);
}

std::string LocalizedElement::to_string() const {
    if (exponent_ == 0) return numerator_.to_string();
    std::string out = "(" + numerator_.to_string() + ")/(" + t_.to_string() + ")";
    if (exponent_ != 1) out += "^" + std::to_string(exponent_);
    return out;
}

}  // namespace lnd
