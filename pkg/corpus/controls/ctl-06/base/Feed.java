package c6;

public interface Feed {
    void open();
}
