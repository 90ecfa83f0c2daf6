package com.acme.shop.util;

/** Tracks brightness up to a fixed limit. */
public class Lantern {
    private int brightness;
    private final int brightnessLimit = 50;

    public void addBrightness(int amount) {
        brightness = Math.min(brightness + amount, brightnessLimit);
    }

    public int brightnessValue() {
        return brightness;
    }

    public boolean isBrightnessFull() {
        return brightness >= brightnessLimit;
    }

    public void clearBrightness() {
        // back to the initial state
        brightness = 0;
    }
}
