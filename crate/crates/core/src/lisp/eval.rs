//! The evaluator: a dispatcher driven by an explicit continuation stack,
//! so deep recursion in Lisp code grows a heap vector instead of the Rust
//! call stack. One unit of fuel is spent each time an expression is
//! dispatched.

use super::{
    primitives, BindingKind, Closure, Env, EvalError, EvalOutcome, Fault, SetError, Value,
};
use crate::sexpr::{SExpr, Word};
use crate::turing::Tape;
use std::rc::Rc;
use std::sync::Arc;

/// Words with special meaning in operator position.
pub const RESERVED: [&str; 5] = ["quote", "define", "set!", "lambda", "cond"];

enum Control {
    Eval(SExpr, Env),
    Return(Value),
}

enum Kont {
    Define {
        name: Arc<str>,
        env: Env,
        form: SExpr,
    },
    Set {
        name: Arc<str>,
        env: Env,
        form: SExpr,
    },
    Cond {
        body: SExpr,
        rest: Vec<(SExpr, SExpr)>,
        env: Env,
    },
    Operator {
        operands: Vec<SExpr>,
        env: Env,
        form: SExpr,
    },
    Operand {
        func: Value,
        done: Vec<Value>,
        pending: Vec<SExpr>,
        env: Env,
        form: SExpr,
    },
}

fn fault(fault: Fault, expr: &SExpr) -> EvalError {
    EvalError {
        fault,
        expr: expr.clone(),
    }
}

fn malformed(form: &'static str, expr: &SExpr) -> EvalError {
    fault(Fault::Malformed(form), expr)
}

fn symbol_name(e: &SExpr) -> Option<Arc<str>> {
    match e {
        SExpr::Atom(Word::Symbol(s)) => Some(s.clone()),
        _ => None,
    }
}

fn check_binder(name: Arc<str>, form: &SExpr) -> Result<Arc<str>, EvalError> {
    if RESERVED.contains(&&*name) {
        return Err(fault(Fault::Reserved(name.to_string()), form));
    }
    Ok(name)
}

pub(super) struct Machine<'t> {
    pub tape: &'t mut Option<Tape>,
    pub fuel: u64,
    pub steps: u64,
}

impl Machine<'_> {
    pub fn eval(&mut self, expr: SExpr, env: Env) -> EvalOutcome {
        self.drive(Control::Eval(expr, env))
    }

    pub fn apply(&mut self, func: Value, args: Vec<Value>, form: &SExpr) -> EvalOutcome {
        match self.apply_value(func, args, form) {
            Ok(control) => self.drive(control),
            Err(error) => EvalOutcome::Fault {
                error,
                steps: self.steps,
            },
        }
    }

    fn drive(&mut self, mut control: Control) -> EvalOutcome {
        let mut stack: Vec<Kont> = Vec::new();
        loop {
            let next = match control {
                Control::Eval(expr, env) => {
                    if self.steps >= self.fuel {
                        return EvalOutcome::FuelExhausted { steps: self.steps };
                    }
                    self.steps += 1;
                    self.dispatch(expr, env, &mut stack)
                }
                Control::Return(value) => match stack.pop() {
                    None => {
                        return EvalOutcome::Value {
                            value,
                            steps: self.steps,
                        }
                    }
                    Some(k) => self.resume(k, value, &mut stack),
                },
            };
            control = match next {
                Ok(c) => c,
                Err(error) => {
                    return EvalOutcome::Fault {
                        error,
                        steps: self.steps,
                    }
                }
            };
        }
    }

    fn dispatch(
        &mut self,
        expr: SExpr,
        env: Env,
        stack: &mut Vec<Kont>,
    ) -> Result<Control, EvalError> {
        let (head, tail) = match &expr {
            SExpr::Atom(Word::Symbol(name)) => {
                return env
                    .lookup(name)
                    .map(Control::Return)
                    .ok_or_else(|| fault(Fault::Unbound(name.to_string()), &expr));
            }
            // numbers, t and nil evaluate to themselves
            SExpr::Atom(_) => return Ok(Control::Return(Value::Datum(expr))),
            SExpr::Pair(h, t) => (SExpr::clone(h), SExpr::clone(t)),
        };
        match head.as_symbol() {
            Some("quote") => {
                let args = tail.to_vec().ok_or_else(|| malformed("quote", &expr))?;
                let [quoted] =
                    <[SExpr; 1]>::try_from(args).map_err(|_| malformed("quote", &expr))?;
                Ok(Control::Return(Value::Datum(quoted)))
            }
            Some(kw @ ("define" | "set!")) => {
                let args = tail
                    .to_vec()
                    .ok_or_else(|| malformed("binding form", &expr))?;
                let [name, value] =
                    <[SExpr; 2]>::try_from(args).map_err(|_| malformed("binding form", &expr))?;
                let name = symbol_name(&name).ok_or_else(|| malformed("binding form", &expr))?;
                let name = check_binder(name, &expr)?;
                if kw == "define" {
                    if env.defines_locally(&name) {
                        return Err(fault(Fault::Redefinition(name.to_string()), &expr));
                    }
                    stack.push(Kont::Define {
                        name,
                        env: env.clone(),
                        form: expr,
                    });
                } else {
                    stack.push(Kont::Set {
                        name,
                        env: env.clone(),
                        form: expr,
                    });
                }
                Ok(Control::Eval(value, env))
            }
            Some("lambda") => {
                let args = tail.to_vec().ok_or_else(|| malformed("lambda", &expr))?;
                let [params, body] =
                    <[SExpr; 2]>::try_from(args).map_err(|_| malformed("lambda", &expr))?;
                let params = params.to_vec().ok_or_else(|| malformed("lambda", &expr))?;
                let mut names: Vec<Arc<str>> = Vec::with_capacity(params.len());
                for p in &params {
                    let name = symbol_name(p).ok_or_else(|| malformed("lambda", &expr))?;
                    let name = check_binder(name, &expr)?;
                    if names.contains(&name) {
                        return Err(malformed("lambda", &expr));
                    }
                    names.push(name);
                }
                Ok(Control::Return(Value::Closure(Rc::new(Closure {
                    params: names,
                    body,
                    env,
                }))))
            }
            Some("cond") => {
                let clauses = tail.to_vec().ok_or_else(|| malformed("cond", &expr))?;
                let mut pairs = Vec::with_capacity(clauses.len());
                for clause in clauses {
                    let parts = clause.to_vec().ok_or_else(|| malformed("cond", &expr))?;
                    let [test, body] =
                        <[SExpr; 2]>::try_from(parts).map_err(|_| malformed("cond", &expr))?;
                    pairs.push((test, body));
                }
                pairs.reverse();
                Ok(Self::next_clause(pairs, env, stack))
            }
            _ => {
                let operands = tail
                    .to_vec()
                    .ok_or_else(|| malformed("application", &expr))?;
                stack.push(Kont::Operator {
                    operands,
                    env: env.clone(),
                    form: expr,
                });
                Ok(Control::Eval(head, env))
            }
        }
    }

    /// `rest` holds the remaining clauses in reverse order.
    fn next_clause(mut rest: Vec<(SExpr, SExpr)>, env: Env, stack: &mut Vec<Kont>) -> Control {
        match rest.pop() {
            None => Control::Return(Value::Datum(SExpr::boolean(false))),
            Some((test, body)) => {
                stack.push(Kont::Cond {
                    body,
                    rest,
                    env: env.clone(),
                });
                Control::Eval(test, env)
            }
        }
    }

    fn resume(
        &mut self,
        k: Kont,
        value: Value,
        stack: &mut Vec<Kont>,
    ) -> Result<Control, EvalError> {
        match k {
            Kont::Define { name, env, form } => {
                if env.defines_locally(&name) {
                    return Err(fault(Fault::Redefinition(name.to_string()), &form));
                }
                env.bind(name.clone(), value, BindingKind::Definition);
                Ok(Control::Return(Value::Datum(SExpr::Atom(Word::Symbol(
                    name,
                )))))
            }
            Kont::Set { name, env, form } => match env.set(&name, value.clone()) {
                Ok(()) => Ok(Control::Return(value)),
                Err(SetError::Immutable) => Err(fault(Fault::Immutable(name.to_string()), &form)),
                Err(SetError::Unbound) => Err(fault(Fault::SetUnbound(name.to_string()), &form)),
            },
            Kont::Cond { body, rest, env } => {
                if value.is_truthy() {
                    Ok(Control::Eval(body, env))
                } else {
                    Ok(Self::next_clause(rest, env, stack))
                }
            }
            Kont::Operator {
                mut operands,
                env,
                form,
            } => {
                if operands.is_empty() {
                    return self.apply_value(value, Vec::new(), &form);
                }
                operands.reverse();
                let first = operands.pop().expect("non-empty");
                let done = Vec::with_capacity(operands.len() + 1);
                stack.push(Kont::Operand {
                    func: value,
                    done,
                    pending: operands,
                    env: env.clone(),
                    form,
                });
                Ok(Control::Eval(first, env))
            }
            Kont::Operand {
                func,
                mut done,
                mut pending,
                env,
                form,
            } => {
                done.push(value);
                match pending.pop() {
                    None => self.apply_value(func, done, &form),
                    Some(next) => {
                        stack.push(Kont::Operand {
                            func,
                            done,
                            pending,
                            env: env.clone(),
                            form,
                        });
                        Ok(Control::Eval(next, env))
                    }
                }
            }
        }
    }

    fn apply_value(
        &mut self,
        func: Value,
        args: Vec<Value>,
        form: &SExpr,
    ) -> Result<Control, EvalError> {
        match func {
            Value::Closure(c) => {
                if c.params.len() != args.len() {
                    return Err(fault(
                        Fault::Arity {
                            name: format!("{}", Value::Closure(c.clone())),
                            expected: c.params.len(),
                            got: args.len(),
                        },
                        form,
                    ));
                }
                let frame = c.env.extend();
                for (p, a) in c.params.iter().zip(args) {
                    frame.bind(p.clone(), a, BindingKind::Parameter);
                }
                Ok(Control::Eval(c.body.clone(), frame))
            }
            Value::Primitive(p) => {
                if p.arity() != args.len() {
                    return Err(fault(
                        Fault::Arity {
                            name: p.name().to_string(),
                            expected: p.arity(),
                            got: args.len(),
                        },
                        form,
                    ));
                }
                primitives::call(p, &args, self.tape)
                    .map(Control::Return)
                    .map_err(|f| fault(f, form))
            }
            Value::Datum(d) => Err(fault(Fault::NotAFunction(d.to_string()), form)),
        }
    }
}
