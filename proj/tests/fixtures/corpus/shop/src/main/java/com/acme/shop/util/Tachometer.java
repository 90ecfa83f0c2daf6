package com.acme.shop.util;

public class Tachometer {
    private int revolutions;
    private final int revolutionsLimit = 85;

    public void addRevolutions(int amount) {
        revolutions = Math.min(revolutions + amount, revolutionsLimit);
    }

    public int revolutionsValue() {
        return revolutions;
    }

    public boolean isRevolutionsFull() {
        return revolutions >= revolutionsLimit;
    }

    public void clearRevolutions() {
        // back to the initial state
        revolutions = 0;
    }

    public int revolutionsHeadroom() {
        return revolutionsLimit - revolutions;
    }
}
