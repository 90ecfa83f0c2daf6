package com.acme.shop.util;

/** Tracks tempo up to a fixed limit. */
public class Metronome {
    private int tempo;
    private final int tempoLimit = 20;

    public void addTempo(int amount) {
        tempo = Math.min(tempo + amount, tempoLimit);
    }

    public int tempoValue() {
        return tempo;
    }

    public boolean isTempoFull() {
        return tempo >= tempoLimit;
    }

    public void clearTempo() {
        // back to the initial state
        tempo = 0;
    }
}
