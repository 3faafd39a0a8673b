use crate::sexpr::SExpr;
use std::cell::RefCell;
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Primitive {
    Cons,
    Car,
    Cdr,
    AtomP,
    EqP,
    Succ,
    Pred,
    NumberP,
    Read,
    Write,
    Move,
}

impl Primitive {
    pub const ALL: [Primitive; 11] = [
        Primitive::Cons,
        Primitive::Car,
        Primitive::Cdr,
        Primitive::AtomP,
        Primitive::EqP,
        Primitive::Succ,
        Primitive::Pred,
        Primitive::NumberP,
        Primitive::Read,
        Primitive::Write,
        Primitive::Move,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Primitive::Cons => "cons",
            Primitive::Car => "car",
            Primitive::Cdr => "cdr",
            Primitive::AtomP => "atom?",
            Primitive::EqP => "eq?",
            Primitive::Succ => "1+",
            Primitive::Pred => "1-",
            Primitive::NumberP => "number?",
            Primitive::Read => "read",
            Primitive::Write => "write",
            Primitive::Move => "move",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Primitive::Read => 0,
            Primitive::Cons | Primitive::EqP => 2,
            _ => 1,
        }
    }
}

pub struct Closure {
    pub params: Vec<Arc<str>>,
    pub body: SExpr,
    pub env: Env,
}

#[derive(Clone)]
pub enum Value {
    Datum(SExpr),
    Closure(Rc<Closure>),
    Primitive(Primitive),
}

impl Value {
    pub fn as_datum(&self) -> Option<&SExpr> {
        match self {
            Value::Datum(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_truthy(&self) -> bool {
        !matches!(self, Value::Datum(e) if e.is_nil())
    }

    pub fn is_function(&self) -> bool {
        !matches!(self, Value::Datum(_))
    }
}

impl From<SExpr> for Value {
    fn from(e: SExpr) -> Self {
        Value::Datum(e)
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Datum(a), Value::Datum(b)) => a == b,
            (Value::Closure(a), Value::Closure(b)) => Rc::ptr_eq(a, b),
            (Value::Primitive(a), Value::Primitive(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Datum(e) => write!(f, "{e}"),
            Value::Closure(c) => write!(f, "#<lambda ({})>", c.params.join(" ")),
            Value::Primitive(p) => write!(f, "#<primitive {}>", p.name()),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How a variable was introduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BindingKind {
    /// Introduced by `define`; never modified.
    Definition,
    /// Modifiable with `set!`.
    Mutable,
    /// A lambda parameter; also modifiable with `set!`.
    Parameter,
}

struct Binding {
    name: Arc<str>,
    value: Value,
    kind: BindingKind,
}

struct Frame {
    bindings: RefCell<Vec<Binding>>,
    parent: Option<Env>,
}

/// A chain of frames; lookups start at the nearest frame.
#[derive(Clone)]
pub struct Env(Rc<Frame>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetError {
    Unbound,
    Immutable,
}

impl Env {
    pub fn empty() -> Self {
        Env(Rc::new(Frame {
            bindings: RefCell::new(Vec::new()),
            parent: None,
        }))
    }

    /// New empty frame whose parent is `self`.
    pub fn extend(&self) -> Self {
        Env(Rc::new(Frame {
            bindings: RefCell::new(Vec::new()),
            parent: Some(self.clone()),
        }))
    }

    pub fn parent(&self) -> Option<&Env> {
        self.0.parent.as_ref()
    }

    pub fn same_frame(&self, other: &Env) -> bool {
        Rc::ptr_eq(&self.0, &other.0)
    }

    pub fn lookup(&self, name: &str) -> Option<Value> {
        self.lookup_with_kind(name).map(|(v, _)| v)
    }

    pub fn lookup_with_kind(&self, name: &str) -> Option<(Value, BindingKind)> {
        let mut env = self;
        loop {
            if let Some(b) = env.0.bindings.borrow().iter().find(|b| &*b.name == name) {
                return Some((b.value.clone(), b.kind));
            }
            env = env.0.parent.as_ref()?;
        }
    }

    pub fn defines_locally(&self, name: &str) -> bool {
        self.0.bindings.borrow().iter().any(|b| &*b.name == name)
    }

    /// Adds a binding to this frame. Callers check for clashes.
    pub fn bind(&self, name: Arc<str>, value: Value, kind: BindingKind) {
        self.0
            .bindings
            .borrow_mut()
            .push(Binding { name, value, kind });
    }

    /// Updates the nearest binding of `name`, which must be mutable or a
    /// parameter.
    pub fn set(&self, name: &str, value: Value) -> Result<(), SetError> {
        let mut env = self;
        loop {
            {
                let mut bindings = env.0.bindings.borrow_mut();
                if let Some(b) = bindings.iter_mut().find(|b| &*b.name == name) {
                    if b.kind == BindingKind::Definition {
                        return Err(SetError::Immutable);
                    }
                    b.value = value;
                    return Ok(());
                }
            }
            env = env.0.parent.as_ref().ok_or(SetError::Unbound)?;
        }
    }

    /// Names bound directly in this frame, in binding order.
    pub fn local_names(&self) -> Vec<Arc<str>> {
        self.0
            .bindings
            .borrow()
            .iter()
            .map(|b| b.name.clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(n: u32) -> Value {
        Value::Datum(SExpr::num(n))
    }

    #[test]
    fn nearest_frame_wins() {
        let root = Env::empty();
        root.bind("x".into(), num(1), BindingKind::Definition);
        let child = root.extend();
        assert_eq!(child.lookup("x"), Some(num(1)));
        child.bind("x".into(), num(2), BindingKind::Parameter);
        assert_eq!(child.lookup("x"), Some(num(2)));
        assert_eq!(root.lookup("x"), Some(num(1)));
        assert_eq!(child.lookup("y"), None);
    }

    #[test]
    fn set_respects_kinds() {
        let root = Env::empty();
        root.bind("d".into(), num(0), BindingKind::Definition);
        root.bind("m".into(), num(0), BindingKind::Mutable);
        let child = root.extend();
        child.bind("p".into(), num(0), BindingKind::Parameter);
        assert_eq!(child.set("d", num(1)), Err(SetError::Immutable));
        assert_eq!(child.set("zz", num(1)), Err(SetError::Unbound));
        child.set("m", num(5)).unwrap();
        child.set("p", num(6)).unwrap();
        assert_eq!(root.lookup("m"), Some(num(5)));
        assert_eq!(
            child.lookup_with_kind("p"),
            Some((num(6), BindingKind::Parameter))
        );
    }

    #[test]
    fn truthiness() {
        assert!(!Value::Datum(SExpr::boolean(false)).is_truthy());
        assert!(num(0).is_truthy());
        assert!(Value::Primitive(Primitive::Car).is_truthy());
    }
}
