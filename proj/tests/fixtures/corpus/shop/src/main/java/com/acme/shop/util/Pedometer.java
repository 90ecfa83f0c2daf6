package com.acme.shop.util;

/** Tracks steps up to a fixed limit. */
public class Pedometer {
    private int steps;
    private final int stepsLimit = 40;

    public void addSteps(int amount) {
        steps = Math.min(steps + amount, stepsLimit);
    }

    public int stepsValue() {
        return steps;
    }

    public boolean isStepsFull() {
        return steps >= stepsLimit;
    }

    public void clearSteps() {
        // back to the initial state
        steps = 0;
    }

    public int stepsHeadroom() {
        return stepsLimit - steps;
    }
}
